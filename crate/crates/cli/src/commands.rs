use std::fmt;
use std::fs;
use std::path::Path;

use hypmetric::geodesy::{
    line_through, parallel_family, scan_min_gap, sinh_cosh_point, sphere_euclidean_radius, GapScan,
};
use hypmetric::homogeneity::{omega_validate_with_cap, projective_counterexample, GaugeCondition};
use hypmetric::isometry::{dilation_residual, fit_isometry_with_tol};
use hypmetric::metric::poincare_coords;
use hypmetric::sample::random_point;
use hypmetric::{
    euclidean_distance, hyperbolic_distance, projective_distance, sphere_distance, GeometryError, Interval, OmegaGauge,
    Point, ProjPoint, Real, SpherePoint, Tolerance,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use serde_json::Value;

use crate::output::{object, to_line, Format};
use crate::{GlobalOpts, MetricTag};

#[derive(Debug)]
pub enum CliError {
    /// Bad input or a violated precondition (exit 2).
    Usage(String),
    /// The input breaks the hypothesis of the operation (exit 3).
    Hypothesis(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Hypothesis(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Hypothesis(msg) => f.write_str(msg),
        }
    }
}

impl From<GeometryError> for CliError {
    fn from(err: GeometryError) -> Self {
        match err {
            GeometryError::NotPartialIsometry { i, j, source_distance, target_distance } => {
                CliError::Hypothesis(format!(
                    "not a partial isometry: pair ({i}, {j}) has source distance {source_distance} \
                     but target distance {target_distance}"
                ))
            }
            other => CliError::Usage(other.to_string()),
        }
    }
}

type CmdResult = Result<String, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn parse_coords(text: &str, g: &GlobalOpts) -> Result<Vec<f64>, CliError> {
    let coords: Vec<f64> = serde_json::from_str(text)
        .map_err(|e| usage(format!("cannot parse point {text:?}: expected e.g. [1.5,-2] ({e})")))?;
    if let Some(n) = g.dim {
        if coords.len() != n {
            return Err(usage(format!("point {text} has {} coordinates, --dim is {n}", coords.len())));
        }
    }
    Ok(coords)
}

fn parse_point(text: &str, g: &GlobalOpts) -> Result<Point<f64>, CliError> {
    Ok(Point::new(parse_coords(text, g)?)?)
}

/// Unit vector input; anything off the sphere by more than `tol` is rejected
/// rather than silently normalized.
fn parse_unit(text: &str, g: &GlobalOpts) -> Result<SpherePoint<f64>, CliError> {
    let coords = parse_coords(text, g)?;
    let len = hypmetric::linalg::norm(&coords);
    let tol = g.tol.unwrap_or(f64::DEFAULT_TOL);
    if (len - 1.0).abs() > tol {
        return Err(usage(format!("point {text} is not a unit vector (norm {len})")));
    }
    Ok(SpherePoint::new(coords)?)
}

fn require_hyperbolic(g: &GlobalOpts, command: &str) -> Result<(), CliError> {
    if g.metric != MetricTag::Hyperbolic {
        return Err(usage(format!("{command} supports only --metric hyperbolic")));
    }
    Ok(())
}

fn tolerance(g: &GlobalOpts) -> Tolerance<f64> {
    g.tol.map_or_else(Tolerance::default, Tolerance::uniform)
}

pub fn dist(g: &GlobalOpts, x: &str, y: &str) -> CmdResult {
    let d = match g.metric {
        MetricTag::Hyperbolic => hyperbolic_distance(&parse_point(x, g)?, &parse_point(y, g)?)?,
        MetricTag::Euclidean => euclidean_distance(&parse_point(x, g)?, &parse_point(y, g)?)?,
        MetricTag::Sphere => sphere_distance(&parse_unit(x, g)?, &parse_unit(y, g)?)?,
        MetricTag::Projective => {
            projective_distance(&ProjPoint::new(parse_unit(x, g)?), &ProjPoint::new(parse_unit(y, g)?))?
        }
    };
    Ok(format!("{}\n", Format::new(g.exact).text(d)))
}

pub fn geodesic(g: &GlobalOpts, a: &str, b: &str) -> CmdResult {
    require_hyperbolic(g, "geodesic")?;
    let (a, b) = (parse_point(a, g)?, parse_point(b, g)?);
    let samples = g.samples.unwrap_or(11);
    if samples < 2 {
        return Err(usage("--samples must be at least 2"));
    }
    let line = line_through(&a, &b, tolerance(g))?;
    let length = hyperbolic_distance(&a, &b)?;
    let n = a.dim();
    let fmt = Format::new(g.exact);

    let mut out = csv::Writer::from_writer(Vec::new());
    let header: Vec<String> = std::iter::once("t".to_string())
        .chain((1..=n).map(|i| format!("x{i}")))
        .chain((1..=n).map(|i| format!("p{i}")))
        .collect();
    out.write_record(&header).map_err(|e| usage(e.to_string()))?;
    for i in 0..samples {
        let t = length * i as f64 / (samples - 1) as f64;
        let p = line.point_at(t);
        let row: Vec<String> = std::iter::once(t)
            .chain(p.coords().iter().copied())
            .chain(poincare_coords(&p))
            .map(|v| fmt.text(v))
            .collect();
        out.write_record(&row).map_err(|e| usage(e.to_string()))?;
    }
    let bytes = out.into_inner().map_err(|e| usage(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| usage(e.to_string()))
}

#[derive(Deserialize)]
struct FitInput {
    pairs: Vec<(Vec<f64>, Vec<f64>)>,
}

pub fn fit(g: &GlobalOpts, file: &Path) -> CmdResult {
    require_hyperbolic(g, "fit")?;
    let text = fs::read_to_string(file).map_err(|e| usage(format!("cannot read {}: {e}", file.display())))?;
    let input: FitInput = serde_json::from_str(&text)
        .map_err(|e| usage(format!("{}: expected {{\"pairs\": [[source, target], ...]}} ({e})", file.display())))?;
    let mut source = Vec::with_capacity(input.pairs.len());
    let mut target = Vec::with_capacity(input.pairs.len());
    for (s, t) in input.pairs {
        if let Some(n) = g.dim {
            if s.len() != n || t.len() != n {
                return Err(usage(format!("every point must have --dim {n} coordinates")));
            }
        }
        source.push(Point::new(s)?);
        target.push(Point::new(t)?);
    }
    let fitted = fit_isometry_with_tol(&source, &target, g.tol.unwrap_or(f64::FIT_TOL))?;
    let iso = &fitted.isometry;
    let fmt = Format::new(g.exact);
    let mut entries = vec![
        ("a", fmt.vec(iso.translation().coords())),
        ("U", fmt.matrix(&iso.linear().rows())),
        ("unique", Value::Bool(fitted.unique)),
        ("max_residual", fmt.num(fitted.max_residual)),
    ];
    if let Some(k) = g.samples {
        // distance drift of the fitted map on seeded random pairs around the data
        let mut rng = ChaCha8Rng::seed_from_u64(g.seed);
        let dim = iso.dim();
        let half = source.iter().flat_map(|p| p.coords()).fold(1.0f64, |m, c| m.max(c.abs()));
        let mut drift = 0f64;
        for _ in 0..k {
            let x: Point<f64> = random_point(&mut rng, dim, half);
            let y: Point<f64> = random_point(&mut rng, dim, half);
            let moved = hyperbolic_distance(&iso.apply(&x)?, &iso.apply(&y)?)?;
            drift = drift.max((moved - hyperbolic_distance(&x, &y)?).abs());
        }
        entries.push(("held_out_drift", fmt.num(drift)));
    }
    Ok(format!("{}\n", to_line(&object(entries))))
}

pub fn parallel(g: &GlobalOpts, a: &str, b: &str, mus: &[f64]) -> CmdResult {
    require_hyperbolic(g, "parallel")?;
    let (a, b) = (parse_point(a, g)?, parse_point(b, g)?);
    if mus.is_empty() {
        return Err(usage("--mus needs at least one value"));
    }
    let fmt = Format::new(g.exact);
    let mut lines = Vec::new();
    let mut gaps = Vec::new();
    for &mu in mus {
        let l = parallel_family(&a, &b, mu)?;
        let rep = scan_min_gap(|s| l.point_at(s), |t| sinh_cosh_point(&a, &b, t), GapScan::default())?;
        lines.push(object([
            ("mu", fmt.num(mu)),
            ("base", fmt.vec(l.base().coords())),
            ("direction", fmt.vec(l.direction().coords())),
        ]));
        gaps.push(fmt.num(rep.gap));
    }
    Ok(format!("{}\n", to_line(&object([("lines", Value::Array(lines)), ("min_gaps", Value::Array(gaps))]))))
}

/// Residual bound below which a constant counts as isometry-compatible.
const COMPATIBLE_RESIDUAL: f64 = 1e-10;

pub fn rigidity(g: &GlobalOpts, c_values: &[f64], t_grid: &[f64]) -> CmdResult {
    let fmt = Format::new(g.exact);
    let mut rows = Vec::new();
    for &c in c_values {
        let residuals = t_grid.iter().map(|&t| dilation_residual(c, t)).collect::<Result<Vec<_>, _>>()?;
        let worst = residuals.iter().copied().fold(0.0, f64::max);
        rows.push(object([
            ("c", fmt.num(c)),
            ("residuals", fmt.vec(&residuals)),
            ("max_residual", fmt.num(worst)),
            ("isometry_compatible", Value::Bool(worst <= COMPATIBLE_RESIDUAL)),
        ]));
    }
    Ok(format!("{}\n", to_line(&object([("t", fmt.vec(t_grid)), ("rows", Value::Array(rows))]))))
}

fn gauge_domain(metric: MetricTag) -> Interval {
    match metric {
        MetricTag::Hyperbolic | MetricTag::Euclidean => Interval::Ray,
        MetricTag::Sphere | MetricTag::Projective => Interval::Unit,
    }
}

fn load_gauge(spec: &str, domain: Interval) -> Result<OmegaGauge<f64>, CliError> {
    Ok(match spec {
        "identity" => OmegaGauge::identity(domain),
        "sqrt" => OmegaGauge::sqrt(domain),
        "square" => OmegaGauge::square(domain),
        "saturating" if domain == Interval::Ray => OmegaGauge::saturating(),
        "saturating" => return Err(usage("the saturating gauge is defined on [0, inf) only")),
        path if Path::new(path).is_file() => {
            let text = fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))?;
            let knots: Vec<(f64, f64)> = serde_json::from_str(&text)
                .map_err(|e| usage(format!("{path}: expected a JSON list of [x, y] knots ({e})")))?;
            OmegaGauge::piecewise_linear(knots, domain)?
        }
        other => {
            return Err(usage(format!(
                "unknown gauge {other:?}: use identity, sqrt, square, saturating or a table file"
            )))
        }
    })
}

pub fn omega(g: &GlobalOpts, spec: &str, grid: usize, cap: f64) -> CmdResult {
    let domain = gauge_domain(g.metric);
    let w = load_gauge(spec, domain)?;
    let report = omega_validate_with_cap(&w, grid, cap)?;
    let fmt = Format::new(g.exact);
    let violation = report.violation.map_or(Value::Null, |v| {
        let condition = match v.condition {
            GaugeCondition::Origin => "origin",
            GaugeCondition::Increasing => "increasing",
            GaugeCondition::Subadditive => "subadditive",
        };
        object([
            ("condition", Value::String(condition.into())),
            ("x", fmt.num(v.x)),
            ("y", fmt.num(v.y)),
            ("omega_x", fmt.num(v.omega_x)),
            ("omega_y", fmt.num(v.omega_y)),
            ("omega_sum", fmt.num(v.omega_sum)),
        ])
    });
    let out = object([
        ("gauge", Value::String(w.name().into())),
        ("domain", Value::String(domain.name().into())),
        ("grid_size", Value::from(grid)),
        ("passed", Value::Bool(report.passed)),
        ("violation", violation),
    ]);
    Ok(format!("{}\n", to_line(&out)))
}

pub fn counterexample(g: &GlobalOpts) -> CmdResult {
    let n = g.dim.unwrap_or(2);
    let ce = projective_counterexample::<f64>(n)?;
    let fmt = Format::new(g.exact);
    let ip = ce.inner_products;
    let out = object([
        ("n", Value::from(n)),
        ("x", fmt.vec(ce.x.coords())),
        ("y", fmt.vec(ce.y.coords())),
        ("z1", fmt.vec(ce.z1.coords())),
        ("z2", fmt.vec(ce.z2.coords())),
        (
            "inner_products",
            object([
                ("x_z1", fmt.num(ip[0])),
                ("x_z2", fmt.num(ip[1])),
                ("y_z1", fmt.num(ip[2])),
                ("y_z2", fmt.num(ip[3])),
            ]),
        ),
        (
            "projective_distances",
            object([("with_z1", fmt.vec(&ce.distances[0])), ("with_z2", fmt.vec(&ce.distances[1]))]),
        ),
        ("gram_margins", fmt.vec(&ce.gram_margins)),
        ("verified", Value::Bool(ce.verified)),
    ]);
    if !ce.verified {
        return Err(CliError::Hypothesis(format!("counterexample failed verification: {}", to_line(&out))));
    }
    Ok(format!("{}\n", to_line(&out)))
}

pub fn sphere_radius(g: &GlobalOpts, r: f64) -> CmdResult {
    Ok(format!("{}\n", Format::new(g.exact).text(sphere_euclidean_radius(r)?)))
}
