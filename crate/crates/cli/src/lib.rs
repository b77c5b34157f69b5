//! Everything behind the `ellsurf` binary: file schemas, JSON and text
//! rendering, and one `run_*` function per subcommand.
//!
//! The binary keeps a strict exit-code contract:
//!
//! * `0` — the command ran and the mathematical answer is affirmative
//!   (or the command is purely descriptive);
//! * `1` — the command ran but the mathematics said no: a verification
//!   check failed, or the data has an identically vanishing discriminant;
//! * `2` — the input never made sense: malformed flags or files, degree
//!   bounds violated, a point not on its curve.
//!
//! All numbers cross the boundary as exact strings (`"p/q"`), polynomials
//! as ascending coefficient arrays, so round-tripping through JSON loses
//! nothing.

use std::fmt;
use std::fs;
use std::path::Path;

use ellsurf::poly;
use ellsurf::{
    BuildError, Certificate, ConstructionSpec, CurveQ, HyperellipticBase, MultipleReport,
    PlaceLocus, PlaceReport, PointQ, Polynomial, Rational, SurfaceError, SurfaceReport,
    TorsionOrder, Valuation, WeierstrassSurfaceData, Witness,
};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

/// Failures sorted by exit code: `Input` exits 2, `Math` exits 1.
#[derive(Debug)]
pub enum CliError {
    /// The request was malformed: unparsable numbers, wrong file shapes,
    /// structural violations.
    Input(String),
    /// The request was well-formed but the mathematics refused: e.g. the
    /// discriminant vanishes identically.
    Math(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Math(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) | CliError::Math(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for CliError {}

// ---------------------------------------------------------------------------
// Parsing helpers
// ---------------------------------------------------------------------------

pub fn parse_rational(s: &str) -> Result<Rational, CliError> {
    s.parse::<Rational>()
        .map_err(|e| CliError::Input(format!("invalid rational '{s}': {e}")))
}

/// Comma-separated rationals: `"1,2,3/2,-4"`.
pub fn parse_lambdas(s: &str) -> Result<Vec<Rational>, CliError> {
    s.split(',').map(|part| parse_rational(part.trim())).collect()
}

fn poly_from_strings(coeffs: &[String]) -> Result<Polynomial, CliError> {
    let parsed: Result<Vec<Rational>, CliError> =
        coeffs.iter().map(|c| parse_rational(c)).collect();
    Ok(Polynomial::new(parsed?))
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let raw = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&raw)
        .map_err(|e| CliError::Input(format!("cannot parse {}: {e}", path.display())))
}

// ---------------------------------------------------------------------------
// File schemas
// ---------------------------------------------------------------------------

/// Weierstrass data over a hyperelliptic base, as stored on disk.
/// Polynomials are ascending coefficient arrays of rational strings.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SurfaceDataFile {
    pub genus: u32,
    pub lambdas: Vec<String>,
    pub a4: Vec<String>,
    pub a6: Vec<String>,
}

/// `y² = x³ + Ax + B` over ℚ.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CurveFile {
    #[serde(rename = "A")]
    pub a: String,
    #[serde(rename = "B")]
    pub b: String,
}

/// A rational point: `{"inf": true}` or `{"x": "...", "y": "..."}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PointFile {
    Infinity { inf: bool },
    Affine { x: String, y: String },
}

fn surface_error(e: SurfaceError) -> CliError {
    match e {
        // A vanishing discriminant is a statement about the data, not about
        // the file format.
        SurfaceError::SingularEquation => CliError::Math(e.to_string()),
        SurfaceError::NonMinimalData | SurfaceError::InvariantViolation(_) => {
            CliError::Math(e.to_string())
        }
        SurfaceError::BadBranchCount { .. }
        | SurfaceError::InvalidLambdas(_)
        | SurfaceError::SectionDegreeBound { .. } => CliError::Input(e.to_string()),
    }
}

fn build_error(e: BuildError) -> CliError {
    CliError::Input(e.to_string())
}

impl SurfaceDataFile {
    pub fn into_data(&self) -> Result<WeierstrassSurfaceData, CliError> {
        let lambdas: Result<Vec<Rational>, CliError> =
            self.lambdas.iter().map(|l| parse_rational(l)).collect();
        let base = HyperellipticBase::new(lambdas?).map_err(surface_error)?;
        if base.genus() != self.genus {
            return Err(CliError::Input(format!(
                "genus field says {}, but {} branch values give genus {}",
                self.genus,
                self.lambdas.len(),
                base.genus()
            )));
        }
        let a4 = poly_from_strings(&self.a4)?;
        let a6 = poly_from_strings(&self.a6)?;
        WeierstrassSurfaceData::new(base, a4, a6).map_err(surface_error)
    }
}

// ---------------------------------------------------------------------------
// JSON rendering
// ---------------------------------------------------------------------------

pub fn poly_json(p: &Polynomial) -> Value {
    Value::Array(
        poly::coeff_strings(p)
            .into_iter()
            .map(Value::String)
            .collect(),
    )
}

fn valuation_json(v: Valuation) -> Value {
    match v.finite() {
        Some(k) => json!(k),
        None => json!("inf"),
    }
}

pub fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::Bool(b) => json!(b),
        Witness::Int(i) => json!(i),
        Witness::Str(s) => json!(s),
        Witness::Rat(r) => json!(r.to_string()),
        Witness::Poly(p) => poly_json(p),
        Witness::List(items) => Value::Array(items.iter().map(witness_json).collect()),
        Witness::Map(entries) => {
            let mut map = serde_json::Map::new();
            for (key, value) in entries {
                map.insert(key.clone(), witness_json(value));
            }
            Value::Object(map)
        }
    }
}

pub fn certificate_json(cert: &Certificate) -> Value {
    json!({
        "checks": cert
            .checks
            .iter()
            .map(|c| json!({
                "name": c.name,
                "pass": c.pass,
                "witness": witness_json(&c.witness),
            }))
            .collect::<Vec<Value>>(),
        "assumptions": cert.assumptions,
        "conclusion": cert.conclusion,
        "all_pass": cert.all_pass,
    })
}

fn place_json(place: &PlaceReport) -> Value {
    let locus = match &place.locus {
        PlaceLocus::Affine(p) => poly_json(p),
        PlaceLocus::Infinity => json!("inf"),
    };
    json!({
        "locus": locus,
        "branch": place.branch,
        "points_on_B": place.points_on_b,
        "v_a4": valuation_json(place.v_a4),
        "v_a6": valuation_json(place.v_a6),
        "v_delta": place.v_delta,
        "kodaira_type": place.kodaira_type.to_string(),
        "euler_number": place.euler_number,
    })
}

pub fn report_json(report: &SurfaceReport) -> Value {
    json!({
        "places": report.places.iter().map(place_json).collect::<Vec<Value>>(),
        "total_euler": report.total_euler,
        "chi": report.chi,
        "minimal": report.minimal,
        "base_genus": report.base_genus,
        "isotrivial": report.isotrivial,
    })
}

pub fn multiples_json(reports: &[MultipleReport]) -> Value {
    Value::Array(
        reports
            .iter()
            .map(|r| {
                let degrees = r.degrees.map(|d| {
                    json!({
                        "x_num": d.x_num,
                        "x_den": d.x_den,
                        "y_num": d.y_num,
                        "y_den": d.y_den,
                    })
                });
                json!({ "n": r.n, "degrees": degrees })
            })
            .collect(),
    )
}

// ---------------------------------------------------------------------------
// Text rendering
// ---------------------------------------------------------------------------

fn witness_text(w: &Witness) -> String {
    match w {
        Witness::Bool(b) => b.to_string(),
        Witness::Int(i) => i.to_string(),
        Witness::Str(s) => s.clone(),
        Witness::Rat(r) => r.to_string(),
        Witness::Poly(p) => p.to_string(),
        Witness::List(items) => {
            let inner: Vec<String> = items.iter().map(witness_text).collect();
            format!("[{}]", inner.join(", "))
        }
        Witness::Map(entries) => entries
            .iter()
            .map(|(k, v)| format!("{k} = {}", witness_text(v)))
            .collect::<Vec<String>>()
            .join(", "),
    }
}

pub fn certificate_text(cert: &Certificate) -> String {
    let mut out = String::new();
    for check in &cert.checks {
        let status = if check.pass { "PASS" } else { "FAIL" };
        out.push_str(&format!(
            "{status} {}: {}\n",
            check.name,
            witness_text(&check.witness)
        ));
    }
    out.push_str(&format!("\nconclusion: {}\n", cert.conclusion));
    out.push_str("assumptions:\n");
    for assumption in &cert.assumptions {
        out.push_str(&format!("  - {assumption}\n"));
    }
    out
}

pub fn report_text(report: &SurfaceReport) -> String {
    let mut out = String::new();
    if report.places.is_empty() {
        out.push_str("no singular fibers\n");
    } else {
        out.push_str("singular fibers:\n");
        for place in &report.places {
            let euler = place
                .euler_number
                .map_or_else(|| String::from("-"), |e| e.to_string());
            out.push_str(&format!(
                "  locus = {locus} | branch = {branch} | points on B = {points} | \
                 v(a4) = {v4} | v(a6) = {v6} | v(delta) = {vd} | type = {ty} | euler = {euler}\n",
                locus = place.locus,
                branch = place.branch,
                points = place.points_on_b,
                v4 = place.v_a4,
                v6 = place.v_a6,
                vd = place.v_delta,
                ty = place.kodaira_type,
            ));
        }
    }
    let opt = |v: Option<u32>| v.map_or_else(|| String::from("-"), |x| x.to_string());
    out.push_str(&format!("total euler number = {}\n", opt(report.total_euler)));
    out.push_str(&format!("chi = {}\n", opt(report.chi)));
    out.push_str(&format!("minimal = {}\n", report.minimal));
    out.push_str(&format!("base genus = {}\n", report.base_genus));
    out.push_str(&format!("isotrivial = {}\n", report.isotrivial));
    out
}

pub fn multiples_text(reports: &[MultipleReport]) -> String {
    let mut out = String::new();
    for r in reports {
        match r.degrees {
            Some(d) => out.push_str(&format!(
                "n = {}: x degrees (num {}, den {}), y degrees (num {}, den {})\n",
                r.n, d.x_num, d.x_den, d.y_num, d.y_den
            )),
            None => out.push_str(&format!("n = {}: zero section\n", r.n)),
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Subcommand implementations
// ---------------------------------------------------------------------------

fn construction_spec(genus: u32, lambdas: Option<&str>) -> Result<ConstructionSpec, CliError> {
    Ok(match lambdas {
        Some(list) => ConstructionSpec::with_lambdas(genus, parse_lambdas(list)?),
        None => ConstructionSpec::new(genus),
    })
}

/// The rendered certificate plus whether every check passed — the caller
/// still prints the output when verification fails, then exits 1.
pub struct VerifyOutcome {
    pub rendered: String,
    pub all_pass: bool,
}

pub fn run_verify(
    genus: u32,
    lambdas: Option<&str>,
    at: &str,
    json: bool,
) -> Result<VerifyOutcome, CliError> {
    let spec = construction_spec(genus, lambdas)?;
    let at = parse_rational(at)?;
    let cert = ellsurf::verify_construction(&spec, &at).map_err(build_error)?;
    let rendered = if json {
        format!("{:#}\n", certificate_json(&cert))
    } else {
        certificate_text(&cert)
    };
    Ok(VerifyOutcome {
        rendered,
        all_pass: cert.all_pass,
    })
}

pub fn run_fibers(path: &Path, json: bool) -> Result<String, CliError> {
    let file: SurfaceDataFile = read_json(path)?;
    let data = file.into_data()?;
    let report = data.fiber_analysis().map_err(surface_error)?;
    Ok(if json {
        format!("{:#}\n", report_json(&report))
    } else {
        report_text(&report)
    })
}

pub fn run_torsion(curve_path: &Path, point_path: &Path, json: bool) -> Result<String, CliError> {
    let curve_file: CurveFile = read_json(curve_path)?;
    let point_file: PointFile = read_json(point_path)?;
    let a = parse_rational(&curve_file.a)?;
    let b = parse_rational(&curve_file.b)?;
    let curve = CurveQ::new(a, b).map_err(|e| CliError::Input(e.to_string()))?;
    let point = match point_file {
        PointFile::Infinity { inf: true } => PointQ::infinity(),
        PointFile::Infinity { inf: false } => {
            return Err(CliError::Input(String::from(
                "point file: \"inf\" must be true (or give x and y)",
            )))
        }
        PointFile::Affine { x, y } => PointQ::affine(parse_rational(&x)?, parse_rational(&y)?),
    };
    if !curve.on_curve(&point) {
        return Err(CliError::Input(format!(
            "point {point} does not lie on {curve}"
        )));
    }
    let order = curve.torsion_order(&point);
    Ok(if json {
        let value = match order {
            TorsionOrder::Finite(n) => json!(n),
            TorsionOrder::Infinite => json!("infinite"),
        };
        format!("{:#}\n", json!({ "torsion_order": value }))
    } else {
        format!("torsion order = {order}\n")
    })
}

pub fn run_multiples(
    genus: u32,
    lambdas: Option<&str>,
    n_max: u32,
    json: bool,
) -> Result<String, CliError> {
    let spec = construction_spec(genus, lambdas)?;
    let reports = ellsurf::section_multiples_report(&spec, n_max).map_err(build_error)?;
    Ok(if json {
        format!("{:#}\n", multiples_json(&reports))
    } else {
        multiples_text(&reports)
    })
}

pub fn run_jinv(genus: u32, lambdas: Option<&str>, json: bool) -> Result<String, CliError> {
    let spec = construction_spec(genus, lambdas)?;
    let (data, _) = ellsurf::build_construction(&spec).map_err(build_error)?;
    let fiber = data.generic_fiber();
    let j = fiber.j_invariant();
    Ok(if json {
        format!(
            "{:#}\n",
            json!({
                "j_numerator": poly_json(j.numerator()),
                "j_denominator": poly_json(j.denominator()),
                "isotrivial": fiber.is_isotrivial(),
            })
        )
    } else {
        format!(
            "j = {j}\nisotrivial = {}\n",
            fiber.is_isotrivial()
        )
    })
}

/// Prints to stdout, or writes to `out` when given.
pub fn emit(rendered: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, rendered)
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{rendered}");
            Ok(())
        }
    }
}
