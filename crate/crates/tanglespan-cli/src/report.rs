//! Report types serialized under one JSON schema, each with a plain-text
//! rendering.  Exact values (polynomial coefficients, determinants,
//! fractions, Plücker coordinates) are carried as decimal strings so no
//! machine consumer is forced through floating point.

use serde::Serialize;
use tanglespan::alexander::AlexanderResult;
use tanglespan::laurent::LaurentPoly;
use tanglespan::roots::{CheckOutcome, FamilySample, RootReport};

/// Version tag on every JSON report.
pub const SCHEMA: u32 = 1;

#[derive(Serialize)]
pub struct PolyJson {
    pub min_deg: i64,
    pub coeffs: Vec<String>,
    pub display: String,
}

impl PolyJson {
    pub fn new(poly: &LaurentPoly) -> Self {
        PolyJson {
            min_deg: poly.min_degree(),
            coeffs: poly.coeffs().iter().map(|c| c.to_string()).collect(),
            display: poly.to_string(),
        }
    }
}

#[derive(Serialize)]
pub struct RouteJson {
    pub route: String,
    pub delta: PolyJson,
    pub determinant: String,
    pub mirror_applied: bool,
}

impl RouteJson {
    pub fn new(result: &AlexanderResult) -> Self {
        RouteJson {
            route: result.route.to_string(),
            delta: PolyJson::new(&result.delta),
            determinant: result.determinant.to_string(),
            mirror_applied: result.mirror_applied,
        }
    }
}

#[derive(Serialize)]
pub struct AlexJson {
    pub schema: u32,
    pub command: &'static str,
    pub input: String,
    pub routes: Vec<RouteJson>,
    pub agree: bool,
}

impl AlexJson {
    pub fn text(&self) -> String {
        let mut out = String::new();
        for route in &self.routes {
            out.push_str(&format!(
                "{}  [{}]\n  delta = {}\n  determinant = {}{}\n",
                self.input,
                route.route,
                route.delta.display,
                route.determinant,
                if route.mirror_applied { "  (mirror)" } else { "" },
            ));
        }
        if self.routes.len() > 1 {
            out.push_str(if self.agree {
                "routes agree\n"
            } else {
                "ROUTE MISMATCH\n"
            });
        }
        out
    }
}

#[derive(Serialize)]
pub struct RootJson {
    pub re: f64,
    pub im: f64,
    pub abs: f64,
    pub residual: f64,
}

#[derive(Serialize)]
pub struct CheckJson {
    pub check: &'static str,
    pub pass: bool,
    pub margin: f64,
}

#[derive(Serialize)]
pub struct RootsJson {
    pub schema: u32,
    pub command: &'static str,
    pub input: String,
    pub delta: PolyJson,
    pub determinant: String,
    pub tolerance: f64,
    pub iterations: usize,
    pub roots: Vec<RootJson>,
    pub check: Option<CheckJson>,
}

impl RootsJson {
    pub fn roots_of(report: &RootReport) -> Vec<RootJson> {
        report
            .roots
            .iter()
            .zip(&report.residuals)
            .map(|(z, &residual)| RootJson {
                re: z.re,
                im: z.im,
                abs: z.norm(),
                residual,
            })
            .collect()
    }

    pub fn text(&self) -> String {
        let mut out = format!(
            "{}: delta = {}  (determinant {})\n{} roots, tolerance {:.1e}:\n",
            self.input,
            self.delta.display,
            self.determinant,
            self.roots.len(),
            self.tolerance,
        );
        for root in &self.roots {
            out.push_str(&format!(
                "  {:>24.16e} {:>+24.16e}i   |t| = {:.16}\n",
                root.re, root.im, root.abs
            ));
        }
        if let Some(check) = &self.check {
            out.push_str(&format!(
                "{}: {} (margin {:.3e})\n",
                check.check,
                if check.pass { "pass" } else { "FAIL" },
                check.margin
            ));
        }
        out
    }
}

#[derive(Serialize)]
pub struct SampleJson {
    pub id: String,
    pub pass: bool,
    pub margin: f64,
    pub determinant: String,
}

impl SampleJson {
    pub fn new(sample: &FamilySample) -> Self {
        SampleJson {
            id: sample.id.clone(),
            pass: sample.passed(),
            margin: sample.outcome.margin,
            determinant: sample.determinant.to_string(),
        }
    }
}

#[derive(Serialize)]
pub struct VerifyJson {
    pub schema: u32,
    pub command: &'static str,
    pub family: String,
    pub check: String,
    pub samples: usize,
    pub failures: usize,
    pub worst_margin: f64,
    pub seed: u64,
    pub bound: i64,
    pub details: Vec<SampleJson>,
}

impl VerifyJson {
    pub fn text(&self) -> String {
        let mut out = format!(
            "{}/{} {} passes for family {} (worst margin {:.3e}, seed {}, bound {})\n",
            self.samples - self.failures,
            self.samples,
            self.check,
            self.family,
            self.worst_margin,
            self.seed,
            self.bound,
        );
        for sample in self.details.iter().filter(|s| !s.pass) {
            out.push_str(&format!(
                "  FAIL {} (margin {:.3e}, determinant {})\n",
                sample.id, sample.margin, sample.determinant
            ));
        }
        out
    }
}

#[derive(Serialize)]
pub struct ColoringJson {
    /// Boundary color matrix rows (NW, NE) and (SW, SE).
    pub matrix: [[String; 2]; 2],
    /// Boundary colors in the order (NW, NE, SW, SE).
    pub boundary: [String; 4],
    pub fraction: String,
    pub plucker: [String; 6],
    pub on_curve: bool,
    pub curve_parameter: Option<String>,
}

#[derive(Serialize)]
pub struct ClassifyJson {
    pub schema: u32,
    pub command: &'static str,
    pub input: String,
    pub fraction: String,
    pub slope: String,
    pub coloring: Option<ColoringJson>,
    pub coloring_error: Option<String>,
}

impl ClassifyJson {
    pub fn text(&self) -> String {
        let mut out = format!(
            "{}\n  fraction = {}\n  slope = {}\n",
            self.input, self.fraction, self.slope
        );
        match (&self.coloring, &self.coloring_error) {
            (Some(c), _) => {
                out.push_str(&format!(
                    "  coloring matrix = [[{}, {}], [{}, {}]]  fraction check = {}\n",
                    c.matrix[0][0], c.matrix[0][1], c.matrix[1][0], c.matrix[1][1], c.fraction
                ));
                out.push_str(&format!(
                    "  plucker = ({})  on curve: {}{}\n",
                    c.plucker.join(", "),
                    c.on_curve,
                    match &c.curve_parameter {
                        Some(p) => format!(", parameter {p}"),
                        None => String::new(),
                    }
                ));
            }
            (None, Some(err)) => out.push_str(&format!("  no integral coloring: {err}\n")),
            (None, None) => {}
        }
        out
    }
}

#[derive(Serialize)]
pub struct CfJson {
    pub schema: u32,
    pub command: &'static str,
    /// Normalized numerator (positive odd).
    pub p: i64,
    /// Normalized denominator (even, in (0, p)).
    pub q: i64,
    pub mirrored: bool,
    pub even_cf: Vec<i64>,
    /// Re-evaluation of the expansion, as a fraction string.
    pub value: String,
}

impl CfJson {
    pub fn text(&self) -> String {
        format!(
            "{}/{} = {:?}{}  (check: {})\n",
            self.p,
            self.q,
            self.even_cf,
            if self.mirrored { "  (mirrored)" } else { "" },
            self.value,
        )
    }
}

pub fn check_json(check: &'static str, outcome: CheckOutcome) -> CheckJson {
    CheckJson {
        check,
        pass: outcome.pass,
        margin: outcome.margin,
    }
}
