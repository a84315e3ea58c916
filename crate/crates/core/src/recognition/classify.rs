//! Sorting connected graphs locally like W(F₄) into W(F₄), its twisted
//! copy, and everything else, with the four tightness hypotheses reported
//! one by one.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::graph::{BichromaticGraph, Color, Diameter};
use crate::iso::{canonical_form, Certificate};

use super::structure::{is_tightly_connected, mu_report, require_locally_f4, twist_first, wf4, Range};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    WF4,
    TwistedWF4,
    Other,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::WF4 => "WF4",
            Verdict::TwistedWF4 => "twisted_WF4",
            Verdict::Other => "other",
        })
    }
}

#[derive(Debug, Clone)]
pub struct F4Report {
    pub verdict: Verdict,
    pub vertices: usize,
    pub short: usize,
    pub long: usize,
    pub divisible_by_8: bool,
    pub order_is_24: bool,
    pub tightly_connected: bool,
    pub diameter: Diameter,
    pub diameter_is_2: bool,
    pub mu_is_3: bool,
    pub mu: Option<Range>,
    pub mu_short: Option<Range>,
    pub mu_long: Option<Range>,
}

fn references() -> &'static (Certificate, Certificate) {
    static R: OnceLock<(Certificate, Certificate)> = OnceLock::new();
    R.get_or_init(|| {
        let g = wf4();
        let t = twist_first(g).expect("W(F4) has strongly connected blocks");
        (
            canonical_form(g).expect("small graph"),
            canonical_form(&t).expect("small graph"),
        )
    })
}

/// The reference twisted copy of W(F₄), built at its first strong pair.
pub fn twisted_wf4() -> Result<BichromaticGraph> {
    twist_first(wf4())
}

/// Classifies a connected graph that is locally like W(F₄). Each hypothesis
/// is evaluated independently.
pub fn classify_f4_candidate(g: &BichromaticGraph) -> Result<F4Report> {
    if !g.is_connected() {
        let comps = g.components(crate::graph::Restrict::All);
        let witness = comps.get(1).and_then(|c| c.first()).map_or(vec![], |v| vec![0, v]);
        return Err(Error::structure("graph is not connected", witness));
    }
    require_locally_f4(g)?;
    let mu = mu_report(g)?;
    let diameter = g.distance_profile().diameter;
    let n = g.len();
    let verdict = if n == 24 {
        let c = canonical_form(g)?;
        let (plain, twisted) = references();
        if c == *plain {
            Verdict::WF4
        } else if c == *twisted {
            Verdict::TwistedWF4
        } else {
            Verdict::Other
        }
    } else {
        Verdict::Other
    };
    Ok(F4Report {
        verdict,
        vertices: n,
        short: g.count_color(Color::Short),
        long: g.count_color(Color::Long),
        divisible_by_8: n.is_multiple_of(8),
        order_is_24: n == 24,
        tightly_connected: is_tightly_connected(g),
        diameter,
        diameter_is_2: diameter == Diameter::Finite(2),
        mu_is_3: mu.mu_is_three(),
        mu: mu.mu,
        mu_short: mu.mu_short,
        mu_long: mu.mu_long,
    })
}

fn range(r: Option<Range>) -> String {
    match r {
        None => "none".to_string(),
        Some(Range { min, max }) if min == max => format!("{min}"),
        Some(Range { min, max }) => format!("{min}..{max}"),
    }
}

impl F4Report {
    pub fn hypotheses(&self) -> [(&'static str, bool); 4] {
        [
            ("order_24", self.order_is_24),
            ("tightly_connected", self.tightly_connected),
            ("diameter_2", self.diameter_is_2),
            ("mu_3", self.mu_is_3),
        ]
    }

    /// `key = value` lines, each key prefixed by `prefix`.
    pub fn key_values(&self, prefix: &str) -> String {
        let mut out = String::new();
        let mut kv = |k: &str, v: String| out.push_str(&format!("{prefix}{k} = {v}\n"));
        kv("verdict", self.verdict.to_string());
        kv("vertices", self.vertices.to_string());
        kv("short", self.short.to_string());
        kv("long", self.long.to_string());
        kv("divisible_by_8", self.divisible_by_8.to_string());
        for (k, v) in self.hypotheses() {
            kv(&format!("hypothesis.{k}"), v.to_string());
        }
        kv("diameter", self.diameter.to_string());
        kv("mu", range(self.mu));
        kv("mu_short", range(self.mu_short));
        kv("mu_long", range(self.mu_long));
        out
    }
}

impl fmt::Display for F4Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verdict: {}", self.verdict)?;
        writeln!(
            f,
            "{} vertices ({} short, {} long), divisible by 8: {}",
            self.vertices, self.short, self.long, self.divisible_by_8
        )?;
        let yes = |b: bool| if b { "holds" } else { "fails" };
        writeln!(f, "|G| = 24: {}", yes(self.order_is_24))?;
        writeln!(f, "tightly connected: {}", yes(self.tightly_connected))?;
        writeln!(f, "diameter 2: {} (diameter {})", yes(self.diameter_is_2), self.diameter)?;
        writeln!(f, "mu = 3 on same-colored pairs: {} (mu {})", yes(self.mu_is_3), range(self.mu))?;
        write!(f, "mixed pairs: mu_s {}, mu_l {}", range(self.mu_short), range(self.mu_long))
    }
}
