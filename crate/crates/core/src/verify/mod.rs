//! Registry of executable identities and their pass/fail reports.
//!
//! Exact identities compare rationals for strict equality over a parameter
//! sweep. Numeric identities compare a truncated series against its limit
//! within [`TOLERANCE_FACTOR`] times the combined tail estimate.

mod exact;
mod numeric;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use dashu::rational::RBig;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::HighPrecFloat;

/// Multiple of the combined tail estimate a numeric check may deviate by.
pub const TOLERANCE_FACTOR: f64 = 3.0;

/// Sweep cap for exact identities under [`Profile::Quick`].
pub const QUICK_N_MAX: u64 = 50;

/// Term cap for numeric identities under [`Profile::Quick`].
pub const QUICK_TERMS_MAX: u64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum IdentityKind {
    Exact,
    Numeric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    Quick,
    Full,
}

impl FromStr for Profile {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "quick" => Ok(Profile::Quick),
            "full" => Ok(Profile::Full),
            _ => Err(Error::Usage(format!("profile must be quick or full, got {s:?}"))),
        }
    }
}

/// Outcome of one identity instance, or a per-identity summary from [`run_all`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub id: String,
    pub params: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
    pub status: Status,
    pub detail: String,
}

/// Sweep overrides; each applies to the identities that read it.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Overrides {
    /// Upper end of the integer sweep of exact identities.
    pub n_max: Option<u64>,
    /// Upper end of the order sweep (`q`, `m`) where one exists.
    pub q_max: Option<u32>,
    /// Replaces the list of rational shifts.
    pub x: Option<RBig>,
    /// Term budget of numeric identities.
    pub terms: Option<u64>,
}

/// Bell-sequence evaluator used on the right side of Coppo's formula.
pub type BellFn = fn(&[RBig]) -> Vec<RBig>;

/// A registered identity.
#[derive(Clone, Copy)]
pub struct Identity {
    pub id: &'static str,
    pub kind: IdentityKind,
    /// The relation being checked.
    pub statement: &'static str,
    /// Default FULL-profile sweep.
    pub sweep: &'static str,
    run: fn(&Plan) -> Result<Vec<Report>>,
}

impl fmt::Debug for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Identity").field("id", &self.id).field("kind", &self.kind).finish()
    }
}

/// Resolved sweep bounds for one run.
pub(crate) struct Plan<'a> {
    pub profile: Profile,
    pub overrides: &'a Overrides,
    pub bell: BellFn,
}

impl Plan<'_> {
    pub fn n_max(&self, full: u64) -> u64 {
        self.overrides.n_max.unwrap_or(match self.profile {
            Profile::Full => full,
            Profile::Quick => full.min(QUICK_N_MAX),
        })
    }

    pub fn q_max(&self, full: u32) -> u32 {
        self.overrides.q_max.unwrap_or(full)
    }

    pub fn xs(&self, defaults: &[RBig]) -> Vec<RBig> {
        match &self.overrides.x {
            Some(x) => vec![x.clone()],
            None => defaults.to_vec(),
        }
    }

    pub fn terms(&self, full: u64) -> u64 {
        self.overrides.terms.unwrap_or(match self.profile {
            Profile::Full => full,
            Profile::Quick => full.min(QUICK_TERMS_MAX),
        })
    }
}

/// Builds a params map from `(key, value)` pairs.
macro_rules! params {
    ($($k:expr => $v:expr),* $(,)?) => {{
        #[allow(unused_mut)]
        let mut m = ::std::collections::BTreeMap::new();
        $( m.insert($k.to_string(), $v.to_string()); )*
        m
    }};
}
pub(crate) use params;

pub(crate) fn exact_report(id: &str, params: BTreeMap<String, String>, lhs: &RBig, rhs: &RBig) -> Report {
    let status = if lhs == rhs { Status::Pass } else { Status::Fail };
    let detail = match status {
        Status::Pass => "exact".to_string(),
        _ => format!("difference {}", lhs.clone() - rhs),
    };
    Report { id: id.to_string(), params, lhs: lhs.to_string(), rhs: rhs.to_string(), status, detail }
}

pub(crate) fn numeric_report(
    id: &str,
    mut params: BTreeMap<String, String>,
    lhs: &HighPrecFloat,
    rhs: &HighPrecFloat,
    tail: f64,
    terms: u64,
) -> Report {
    params.insert("N".into(), terms.to_string());
    let err = (lhs - rhs).abs().to_f64();
    let tol = TOLERANCE_FACTOR * tail;
    let status = if err <= tol { Status::Pass } else { Status::Fail };
    Report {
        id: id.to_string(),
        params,
        lhs: lhs.to_sci(20),
        rhs: rhs.to_sci(20),
        status,
        detail: format!("abs_error={err:.3e} tail={tail:.3e} tolerance={tol:.3e}"),
    }
}

pub(crate) fn skip_report(id: &str, params: BTreeMap<String, String>, reason: impl Into<String>) -> Report {
    Report { id: id.to_string(), params, lhs: String::new(), rhs: String::new(), status: Status::Skip, detail: reason.into() }
}

/// All registered identities, in report order.
pub fn registry() -> &'static [Identity] {
    REGISTRY
}

/// Looks up a registered identity.
pub fn identity(id: &str) -> Option<&'static Identity> {
    REGISTRY.iter().find(|i| i.id == id)
}

macro_rules! reg {
    ($id:literal, $kind:ident, $stmt:literal, $sweep:literal, $f:path) => {
        Identity { id: $id, kind: IdentityKind::$kind, statement: $stmt, sweep: $sweep, run: $f }
    };
}

static REGISTRY: &[Identity] = &[
    reg!("fs_6_1", Exact, "−S_n(1) = H_n", "n ≤ 200", exact::fs_6_1),
    reg!("fs_6_2", Exact, "−S_n(2) = ½H_n² + ½H_n^(2)", "n ≤ 200", exact::fs_6_2),
    reg!("fs_6_3", Exact, "−S_n(3) = ⅙H_n³ + ½H_nH_n^(2) + ⅓H_n^(3)", "n ≤ 200", exact::fs_6_3),
    reg!("fs_4_general", Exact, "−S_n(m) = partition sum of ∏(H_n^(j)/j)^{k_j}/k_j!", "n ≤ 100, m ≤ 8", exact::fs_4_general),
    reg!("adamchik_7_1", Exact, "Σ H_k/k = ½H_n² + ½H_n^(2)", "n ≤ 200", exact::adamchik_7_1),
    reg!("adamchik_7_2", Exact, "Σ H_k^(2)/k + Σ H_k/k² = H_n^(3) + H_nH_n^(2)", "n ≤ 200", exact::adamchik_7_2),
    reg!(
        "adamchik_7_3",
        Exact,
        "Σ H_k²/k + Σ H_k^(2)/k = ⅓H_n³ + H_nH_n^(2) + ⅔H_n^(3) = −2S_n(3) = 2Σ(1/k)Σ H_j/j",
        "n ≤ 200",
        exact::adamchik_7_3
    ),
    reg!("spiess_15a", Exact, "Σ 1/(k(n−k+1)) = 2H_n/(n+1)", "n ≤ 200", exact::spiess_15a),
    reg!("spiess_15b", Exact, "Σ 2H_{k−1}/(k(n−k+1)) = 3(H_n² − H_n^(2))/(n+1)", "n ≤ 200", exact::spiess_15b),
    reg!(
        "spiess_15c",
        Exact,
        "Σ 4H_{k−1}H_{n−k}/(k(n−k+1)) = 4(H_n³ − 3H_nH_n^(2) + 2H_n^(3))/(n+1)",
        "n ≤ 200",
        exact::spiess_15c
    ),
    reg!("larcombe_16_1", Exact, "m·C(m+n,n)·Σ C(n,k)(−1)^k/(m+k) = 1", "m ≤ 10, n ≤ 50", exact::larcombe_16_1),
    reg!("larcombe_16_2", Exact, "m·C(m+n,n)·Σ C(n,k)(−1)^k/(m+k)² = Σ_{k=m}^{m+n} 1/k", "m ≤ 10, n ≤ 50", exact::larcombe_16_2),
    reg!("larcombe_16_3", Exact, "2m·C(m+n,n)·Σ C(n,k)(−1)^k/(m+k)³ = A² + B", "m ≤ 10, n ≤ 50", exact::larcombe_16_3),
    reg!("larcombe_16_4", Exact, "6m·C(m+n,n)·Σ C(n,k)(−1)^k/(m+k)⁴ = A³ + 3AB + 2C", "m ≤ 10, n ≤ 50", exact::larcombe_16_4),
    reg!(
        "coppo_30",
        Exact,
        "Σ C(n,k)(−1)^k/(k+x)^q = n!/((x)_{n+1})·Y_{q−1}(0!H_{n+1}^(1)(x), …)/(q−1)!",
        "n ≤ 200, q ≤ 8, x ∈ {1, 1/2, 1/3, 2, 7/4, −1/2}",
        exact::coppo_30
    ),
    reg!("g_derivative", Exact, "g′(x) = −g(x)·H_{n+1}^(1)(x) for g = n!/(x)_{n+1}", "n ≤ 50, x ∈ {1/2, 1/3, 7/4, 2}", exact::g_derivative),
    reg!("gamma_ratio_half", Exact, "n!/(½)_{n+1} = 2^{2n+1}(n!)²/(2n+1)!", "n ≤ 30", exact::gamma_ratio_half),
    reg!("e44_3", Exact, "Γ(n+x)/(Γ(1+x)Γ(n)) coefficients of x, x², x³", "2 ≤ n ≤ 200", exact::e44_3),
    reg!("e44_4", Exact, "Γ(1+x)Γ(n)/Γ(n+x) coefficients of x, x², x³", "2 ≤ n ≤ 200", exact::e44_4),
    reg!("e44_7", Exact, "r!·Σ(−1)^{n+k}s(n,k)C(k,r)u^{k−r} = (u)_n·Y_r(H_n^(1)(u), −1!H_n^(2)(u), …)", "n ≤ 20, r ≤ n, u ∈ {1, 1/2, 3}", exact::e44_7),
    reg!("e44_8", Exact, "Σ(−1)^{n+k}s(n,k)C(k,r) = (n!/r!)·Y_r(H_n^(1), −1!H_n^(2), …)", "n ≤ 30, r ≤ n", exact::e44_8),
    reg!("e44_9", Exact, "(−1)^{n+r}s(n+1,r+1) = Σ(−1)^{n+k}s(n,k)C(k,r)", "n ≤ 30, r ≤ n", exact::e44_9),
    reg!("e44_10", Exact, "s(n+1,r+1) = (−1)^{n+r}(n!/r!)·Y_r(H_n^(1), −1!H_n^(2), …)", "n ≤ 30, r ≤ n", exact::e44_10),
    reg!("nH_identity", Exact, "nH_n = n + Σ_{k<n} H_k", "n ≤ 200", exact::nh_identity),
    reg!("hasse_coppo", Exact, "Hasse terms of ζ(q+1,x) equal the Euler–Hurwitz terms shifted by one", "n ≤ 200, q ≤ 4, x ∈ {1, 1/2, 3/2}", exact::hasse_coppo),
    reg!("shen_45_2", Numeric, "ζ(p+1) = Σ |s(k,p)|/(k·k!)", "p ∈ {1, 2, 3}, N = 10⁴", numeric::shen_45_2),
    reg!("zeta_a_1", Numeric, "ζ_a(1) = Σ 1/(n2^n) = log 2", "N = 80", numeric::zeta_a_1),
    reg!("zeta_a_2", Numeric, "ζ_a(2) = Σ H_n/(n2^n)", "N = 80", numeric::zeta_a_2),
    reg!("zeta_a_3", Numeric, "ζ_a(3) = ½Σ (H_n² + H_n^(2))/(n2^n) = Σ(1/(n2^n))Σ C(n,k)(−1)^{k+1}/k²", "N = 80", numeric::zeta_a_3),
    reg!("zeta_a_4", Numeric, "ζ_a(4) = Σ Y_3/(3!·n2^n) = Σ(1/(n2^n))Σ C(n,k)(−1)^{k+1}/k³", "N = 80", numeric::zeta_a_4),
    reg!("zeta_a_5", Numeric, "ζ_a(5) = Σ Y_4/(4!·n2^n) = Σ(1/(n2^n))Σ C(n,k)(−1)^{k+1}/k⁴", "N = 80", numeric::zeta_a_5),
    reg!("zeta_3", Numeric, "ζ(3) = ½Σ H_n/n² = ½Σ(1/n²)Σ C(n,k)(−1)^{k+1}/k", "N = 10⁵", numeric::zeta_3),
    reg!("zeta_4", Numeric, "ζ(4) = (1/3!)Σ(H_n² + H_n^(2))/n² = ⅓Σ(1/n²)Σ C(n,k)(−1)^{k+1}/k²", "N = 10⁵", numeric::zeta_4),
    reg!("zeta_5", Numeric, "ζ(5) = (1/4!)Σ(H_n³ + 3H_nH_n^(2) + 2H_n^(3))/n² = ¼Σ(1/n²)Σ C(n,k)(−1)^{k+1}/k³", "N = 10⁵", numeric::zeta_5),
    reg!("e14_1", Numeric, "ζ(s+2) = (1/(s+1))Σ(1/n²)Σ C(n,k)(−1)^{k+1}/k^s", "s ∈ {1, 2, 3}, N = 10⁴", numeric::e14_1),
    reg!("e14_2", Numeric, "ζ_a(s) = Σ(1/(n2^n))Σ C(n,k)(−1)^{k+1}/k^{s−1}", "s ∈ {1, 2, 3}, N = 60", numeric::e14_2),
    reg!("e14_3", Numeric, "Σ(1/n²)Σ C(n,k)(−y)^k/k^s = −(s+1)Li_{s+2}(y) + log y·Li_{s+1}(y)", "s ∈ {1, 2}, y = 1/2, N = 400", numeric::e14_3),
    reg!("e14_4", Numeric, "Σ(1/(n2^n))Σ C(n,k)y^k/k^s = Li_{s+1}(y)", "s ∈ {1, 2, 3}, y ∈ {1/2, −1/2}, N = 80", numeric::e14_4),
    reg!("hasse_12_2", Numeric, "ζ(s,x) = (1/(s−1))Σ(1/(n+1))Σ C(n,k)(−1)^k(k+x)^{1−s}", "s ∈ {2, 3}, x ∈ {1, 1/4, 3/2}, N = 10⁴", numeric::hasse_12_2),
    reg!("alt_hurwitz_13", Numeric, "ζ_a(s,x) = Σ 2^{−n−1}Σ C(n,k)(−1)^k(k+x)^{−s}", "s ∈ {1, 2, 3}, x ∈ {1/2, 1/3}, N = 80", numeric::alt_hurwitz_13),
    reg!("euler_hurwitz_q", Numeric, "ζ(q+1,x) by the Bell route and by the Stirling route", "q ≤ 4, x ∈ {1, 1/2, 3/2}, N = 10⁴", numeric::euler_hurwitz_q),
    reg!("mixed_45_7", Numeric, "ζ(q+1,x) = (2/(q(q−1)))Σ(nH_n − 1)·C_{q−1}(n,x)/n², q ∈ {3, 4, 5}", "x ∈ {1, 1/2, 3/2}, N = 10⁵", numeric::mixed_45_7),
    reg!("e41", Numeric, "3!ζ(4) = Σ(H_n² + H_n^(2))/n²", "N = 10⁵", numeric::e41),
    reg!("e43", Numeric, "4!ζ(5) = Σ(H_n³ + 3H_nH_n^(2) + 2H_n^(3))/n²", "N = 10⁵", numeric::e43),
    reg!("e43_2", Numeric, "5!ζ(6) = Σ(H_n⁴ + 6H_n²H_n^(2) + 8H_nH_n^(3) + 3[H_n^(2)]² + 6H_n^(4))/n²", "N = 10⁵", numeric::e43_2),
    reg!("e45_8", Numeric, "12ζ(5) = Σ(nH_n − 1)(H_n² + H_n^(2))/n³", "N = 10⁵", numeric::e45_8),
    reg!("e45_10", Numeric, "60ζ(6) = Σ(nH_n − 1)(H_n³ + 3H_nH_n^(2) + 2H_n^(3))/n³", "N = 10⁵", numeric::e45_10),
    reg!("catalan_equiv", Numeric, "(π/4)Σ C(2n,n)²/(16^n(2n+1)) = ½Σ 4^n(n!)²/((2n)!(2n+1)²) = G", "N = 10⁵", numeric::catalan_equiv),
    reg!("zeta2_37", Numeric, "3ζ(2) = Σ 2^{2n+1}(n!)²/((n+1)(2n+1)!)", "N = 10⁶", numeric::zeta2_37),
    reg!("zeta3_half_45_6", Numeric, "7ζ(3) = ½Σ(nH_n − 1)[2^nΓ(n)]²/(n²Γ(2n))", "N = 10⁴", numeric::zeta3_half_45_6),
    reg!("digamma_48_1", Numeric, "Σ ψ(n+½)/(2n+1)² = −(γπ² + 7ζ(3))/8", "N = 10⁵", numeric::digamma_48_1),
    reg!("digamma_48_3", Numeric, "Σ ψ(n+½)/(2n+1)⁴ = −(3π²ζ(3) + π⁴γ + 93ζ(5))/96", "N = 10³", numeric::digamma_48_3),
];

fn run_plan(id: &Identity, plan: &Plan) -> Result<Vec<Report>> {
    (id.run)(plan)
}

/// Runs one identity's sweep (FULL bounds unless overridden). Reports come in sweep order.
pub fn run_identity(id: &str, overrides: &Overrides) -> Result<Vec<Report>> {
    run_identity_profile(id, overrides, Profile::Full)
}

/// [`run_identity`] with explicit profile caps.
pub fn run_identity_profile(id: &str, overrides: &Overrides, profile: Profile) -> Result<Vec<Report>> {
    let ident = identity(id).ok_or_else(|| Error::Usage(format!("unknown identity {id:?}")))?;
    run_plan(ident, &Plan { profile, overrides, bell: crate::combinatorics::bell_sequence })
}

/// One summary report per registered identity, in registry order.
pub fn run_all(profile: Profile) -> Vec<Report> {
    run_all_with(profile, &Overrides::default(), crate::combinatorics::bell_sequence)
}

/// [`run_all`] with overrides and a replacement Bell evaluator for Coppo's formula.
pub fn run_all_with(profile: Profile, overrides: &Overrides, bell: BellFn) -> Vec<Report> {
    let plan = Plan { profile, overrides, bell };
    REGISTRY.par_iter().map(|ident| summarize(ident, run_plan(ident, &plan))).collect()
}

/// Collapses a sweep into one report; the first failure's sides are kept.
pub fn summarize(ident: &Identity, outcome: Result<Vec<Report>>) -> Report {
    let reports = match outcome {
        Ok(r) => r,
        Err(e) => {
            return Report {
                id: ident.id.to_string(),
                params: BTreeMap::new(),
                lhs: String::new(),
                rhs: String::new(),
                status: Status::Fail,
                detail: format!("error: {e}"),
            }
        }
    };
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    let (pass, fail, skip) = (count(Status::Pass), count(Status::Fail), count(Status::Skip));
    let first_fail = reports.iter().find(|r| r.status == Status::Fail);
    let status = if fail > 0 {
        Status::Fail
    } else if pass == 0 {
        Status::Skip
    } else {
        Status::Pass
    };
    let mut detail = format!("cases={} pass={pass} fail={fail} skip={skip}", reports.len());
    if let Some(f) = first_fail {
        detail.push_str(&format!("; first failure: {}", f.detail));
    }
    Report {
        id: ident.id.to_string(),
        params: first_fail.map(|f| f.params.clone()).unwrap_or_default(),
        lhs: first_fail.map(|f| f.lhs.clone()).unwrap_or_default(),
        rhs: first_fail.map(|f| f.rhs.clone()).unwrap_or_default(),
        status,
        detail,
    }
}

/// `identities=…, pass=…, fail=…, skip=…` for a summary sequence.
pub fn summary_line(reports: &[Report]) -> String {
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    format!(
        "identities={}, pass={}, fail={}, skip={}",
        reports.len(),
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Skip)
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rat;

    #[test]
    fn registry_ids_are_unique_and_cover_the_minimum_set() {
        let mut ids: Vec<&str> = registry().iter().map(|i| i.id).collect();
        let n = ids.len();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), n);
        assert!(n >= 25);
        for want in ["fs_6_1", "coppo_30", "adamchik_7_3", "spiess_15c", "larcombe_16_4", "e44_9", "e45_10", "digamma_48_3"] {
            assert!(identity(want).is_some(), "{want}");
        }
    }

    #[test]
    fn report_round_trips_through_json() {
        let r = exact_report("x", params! {"n" => 3, "x" => rat(1, 3)}, &rat(1, 2), &rat(1, 3));
        assert_eq!(r.status, Status::Fail);
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.contains("\"FAIL\""));
        let back: Report = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.lhs, "1/2");
    }

    #[test]
    fn unknown_identity_is_a_usage_error() {
        assert!(matches!(run_identity("no_such", &Overrides::default()), Err(Error::Usage(_))));
    }

    #[test]
    fn coppo_override_sweep() {
        let ov = Overrides { n_max: Some(100), q_max: Some(6), x: Some(rat(1, 3)), terms: None };
        let r = run_identity("coppo_30", &ov).unwrap();
        assert_eq!(r.len(), 101 * 6);
        assert!(r.iter().all(|r| r.status == Status::Pass));
    }

    #[test]
    fn pole_cases_are_skipped() {
        let ov = Overrides { n_max: Some(5), q_max: Some(2), x: Some(RBig::from(-2)), terms: None };
        let r = run_identity("coppo_30", &ov).unwrap();
        assert_eq!(r.len(), 12);
        assert_eq!(r.iter().filter(|r| r.status == Status::Skip).count(), 8);
        assert!(r.iter().all(|r| r.status != Status::Fail));
    }

    fn corrupted(xs: &[RBig]) -> Vec<RBig> {
        let mut ys = crate::combinatorics::bell_sequence(xs);
        if ys.len() > 3 {
            ys[3] += RBig::ONE;
        }
        ys
    }

    #[test]
    fn corrupted_bell_coefficient_fails_coppo() {
        let ov = Overrides { n_max: Some(10), q_max: Some(5), x: None, terms: Some(100) };
        let reports = run_all_with(Profile::Quick, &ov, corrupted);
        let coppo = reports.iter().find(|r| r.id == "coppo_30").unwrap();
        assert_eq!(coppo.status, Status::Fail);
        assert!(!coppo.lhs.is_empty() && !coppo.rhs.is_empty());
        assert_eq!(reports.len(), registry().len());
    }

    #[test]
    fn quick_profile_passes() {
        let reports = run_all(Profile::Quick);
        let fails: Vec<_> = reports.iter().filter(|r| r.status != Status::Pass).collect();
        assert!(fails.is_empty(), "{fails:#?}");
        assert!(summary_line(&reports).ends_with("fail=0, skip=0"));
    }
}
