use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{enumerate_partitions, sweep, EnumSpec, Filters};
use crate::analysis::{self, WidthReport};
use crate::constructions::{cyclic_latin_square, doubling, gstar, ham_factor};
use crate::covers::min_cover;
use crate::error::{Error, Result};
use crate::model::ColoredBiclique;

/// A checkable statement about colorings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    /// With at most two bi-equivalence classes, each has at most two
    /// nontrivial components.
    Prop41,
    /// With three classes, one having more than three nontrivial components
    /// forces another class to be spanning with exactly two components.
    Prop42,
    /// Spanning partitions with `r <= 3` have a class of width at most `r`.
    Cor43,
    /// The vertices can be covered by at most `bound` monochromatic components.
    Cover,
    /// Every class of a spanning partition has width at most `2^{r-1}`.
    WidthBound,
    /// Antichain partitions have a class of width at most `r` (`r <= 4`) or
    /// 8 (`r = 5`).
    AntichainWidth,
    /// Five-class antichain partitions with every width at least 6 have at
    /// most two singletons per side.
    Lemma52,
}

impl Claim {
    pub const ALL: [Claim; 7] = [
        Claim::Prop41,
        Claim::Prop42,
        Claim::Cor43,
        Claim::Cover,
        Claim::WidthBound,
        Claim::AntichainWidth,
        Claim::Lemma52,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::Prop41 => "prop41",
            Claim::Prop42 => "prop42",
            Claim::Cor43 => "cor43",
            Claim::Cover => "cover",
            Claim::WidthBound => "width-bound",
            Claim::AntichainWidth => "antichain-width",
            Claim::Lemma52 => "lemma52",
        }
    }

    /// The enumeration filters matching the claim's hypotheses.
    pub fn filters(self) -> Filters {
        match self {
            Claim::Prop41 | Claim::Prop42 => Filters::bi_equivalence(),
            Claim::Cor43 | Claim::WidthBound => Filters::spanning_bi_equivalence(),
            Claim::Cover => Filters::none(),
            Claim::AntichainWidth | Claim::Lemma52 => Filters::antichain(),
        }
    }

    /// Checks one coloring. `bound` is only read by [`Claim::Cover`].
    pub fn check(self, cb: &ColoredBiclique, bound: usize) -> Check {
        let hyp = |cond: bool| cond && self.hypotheses_hold(cb);
        match self {
            Claim::Prop41 => {
                let premise = hyp(cb.r() <= 2);
                Check::plain(premise, !premise || WidthReport::new(cb).max_nontrivial() <= 2)
            }
            Claim::Prop42 => prop42(cb, hyp(cb.r() == 3)),
            Claim::Cor43 => {
                let premise = hyp(cb.r() <= 3);
                Check::plain(premise, !premise || WidthReport::new(cb).min_nontrivial() <= cb.r())
            }
            Claim::Cover => Check::plain(true, min_cover(cb).len() <= bound),
            Claim::WidthBound => {
                let premise = hyp(cb.r() < 64);
                Check::plain(
                    premise,
                    !premise || WidthReport::new(cb).max_nontrivial() <= 1usize << (cb.r() - 1),
                )
            }
            Claim::AntichainWidth => match antichain_width_bound(cb.r()) {
                Some(limit) if hyp(true) => Check::plain(true, WidthReport::new(cb).min_nontrivial() <= limit),
                _ => Check::plain(false, true),
            },
            Claim::Lemma52 => lemma52(cb, hyp(cb.r() == 5)),
        }
    }

    fn hypotheses_hold(self, cb: &ColoredBiclique) -> bool {
        let f = self.filters();
        (!f.bi_equivalence || analysis::is_all_bi_equivalence(cb))
            && (!f.spanning || analysis::is_spanning(cb))
            && (!f.antichain || analysis::is_antichain(cb).unwrap_or(false))
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown claim {s:?}")))
    }
}

/// The width every antichain partition with `r` classes must undercut in
/// some class, where such a statement is available.
pub fn antichain_width_bound(r: usize) -> Option<usize> {
    match r {
        1..=4 => Some(r),
        5 => Some(8),
        _ => None,
    }
}

/// Default cover bound: `2r - 2`, but at least one component.
pub fn default_cover_bound(r: usize) -> usize {
    (2 * r).saturating_sub(2).max(1)
}

/// Outcome of a claim on one instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Check {
    /// The claim's hypotheses apply to this instance.
    pub premise: bool,
    pub holds: bool,
    /// Two readings of the statement disagree here.
    pub ambiguous: bool,
}

impl Check {
    fn plain(premise: bool, holds: bool) -> Self {
        Check {
            premise,
            holds,
            ambiguous: false,
        }
    }
}

fn prop42(cb: &ColoredBiclique, applies: bool) -> Check {
    if !applies {
        return Check::plain(false, true);
    }
    let report = WidthReport::new(cb);
    let Some(big) = report.per_color.iter().find(|w| w.nontrivial > 3) else {
        return Check::plain(false, true);
    };
    let others = report.per_color.iter().filter(|w| w.color != big.color);
    // spanning class (touches every vertex) with two components, versus a
    // class with two nontrivial components whether or not it touches everything
    let strict = others.clone().any(|w| w.isolated == 0 && w.nontrivial == 2);
    let loose = others.clone().any(|w| w.nontrivial == 2);
    Check {
        premise: true,
        holds: strict,
        ambiguous: strict != loose,
    }
}

fn lemma52(cb: &ColoredBiclique, applies: bool) -> Check {
    let report = WidthReport::new(cb);
    if !applies || !analysis::is_reduced(cb) || report.min_nontrivial() < 6 {
        return Check::plain(false, true);
    }
    let singles = analysis::singleton_blocks(cb);
    let xs = singles.iter().filter(|(v, _)| matches!(v, crate::model::Vertex::X(_))).count();
    let ys = singles.len() - xs;
    Check::plain(true, xs <= 2 && ys <= 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepMode {
    Exhaustive,
    Sampled,
}

impl fmt::Display for SweepMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SweepMode::Exhaustive => "exhaustive",
            SweepMode::Sampled => "sampled",
        })
    }
}

/// Result of checking one claim over a space of instances.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub claim: Claim,
    pub mode: SweepMode,
    /// What was swept, stated exactly.
    pub space: String,
    pub instances: usize,
    /// Instances on which the claim's premise applied.
    pub premise_hits: usize,
    /// Instances on which two readings of the claim disagree.
    pub ambiguous: usize,
    pub bound: Option<usize>,
    pub passed: bool,
    /// First failing instance in sweep order.
    pub witness: Option<ColoredBiclique>,
}

impl ClaimReport {
    /// `key: value` lines.
    pub fn to_lines(&self) -> String {
        let mut out = format!(
            "claim: {}\nmode: {}\nspace: {}\ninstances: {}\npremise_hits: {}\nambiguous: {}\n",
            self.claim, self.mode, self.space, self.instances, self.premise_hits, self.ambiguous
        );
        if let Some(b) = self.bound {
            out.push_str(&format!("bound: {b}\n"));
        }
        out.push_str(&format!("result: {}\n", if self.passed { "PASS" } else { "FAIL" }));
        if let Some(w) = &self.witness {
            out.push_str(&format!("witness: {:?}\n", w.rows().collect::<Vec<_>>()));
        }
        out
    }

    /// One-line summary such as `PASS, exhaustive, bound 4`.
    pub fn summary(&self) -> String {
        let mut s = format!("{}, {}", if self.passed { "PASS" } else { "FAIL" }, self.mode);
        if let Some(b) = self.bound {
            s.push_str(&format!(", bound {b}"));
        }
        s
    }
}

#[derive(Default)]
struct Tally {
    instances: usize,
    premise_hits: usize,
    ambiguous: usize,
    first_failure: Option<(usize, ColoredBiclique)>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.instances += other.instances;
        self.premise_hits += other.premise_hits;
        self.ambiguous += other.ambiguous;
        self.first_failure = match (self.first_failure, other.first_failure) {
            (Some(a), Some(b)) => Some(if a.0 <= b.0 { a } else { b }),
            (a, b) => a.or(b),
        };
        self
    }
}

/// Runs `claim` over a stream, possibly in parallel. The reported witness
/// is always the first failure in stream order.
fn tally<I>(items: I, claim: Claim, bound: usize) -> Tally
where
    I: Iterator<Item = ColoredBiclique> + Send,
{
    items
        .enumerate()
        .par_bridge()
        .map(|(idx, cb)| {
            let check = claim.check(&cb, bound);
            Tally {
                instances: 1,
                premise_hits: check.premise as usize,
                ambiguous: check.ambiguous as usize,
                first_failure: (!check.holds).then_some((idx, cb)),
            }
        })
        .reduce(Tally::default, Tally::merge)
}

/// First coloring of `spec` (a single shape) whose minimum cover exceeds `bound`.
pub fn verify_cover_conjecture(spec: EnumSpec, bound: usize) -> Result<Option<ColoredBiclique>> {
    let stream = enumerate_partitions(spec)?;
    Ok(tally(stream, Claim::Cover, bound).first_failure.map(|(_, cb)| cb))
}

/// Checks `claim` on every shape up to `spec.m x spec.n` with `spec.r`
/// colors. The claim's own filters are added to `spec.filters`.
pub fn run_exhaustive(claim: Claim, spec: EnumSpec, bound: Option<usize>) -> Result<ClaimReport> {
    let want = claim.filters();
    let filters = Filters {
        bi_equivalence: spec.filters.bi_equivalence || want.bi_equivalence,
        spanning: spec.filters.spanning || want.spanning,
        antichain: spec.filters.antichain || want.antichain,
        reduced: spec.filters.reduced || want.reduced,
    };
    let spec = EnumSpec { filters, ..spec };
    let bound = (claim == Claim::Cover).then(|| bound.unwrap_or(default_cover_bound(spec.r)));
    let t = tally(sweep(spec)?, claim, bound.unwrap_or(0));
    Ok(ClaimReport {
        claim,
        mode: SweepMode::Exhaustive,
        space: format!(
            "r={} m=1..{} n=1..{} filters={} {}",
            spec.r,
            spec.m,
            spec.n,
            spec.filters.describe(),
            if spec.canonical {
                "one representative per row/column/color symmetry orbit"
            } else {
                "all labelled colorings"
            }
        ),
        instances: t.instances,
        premise_hits: t.premise_hits,
        ambiguous: t.ambiguous,
        bound,
        passed: t.first_failure.is_none(),
        witness: t.first_failure.map(|(_, cb)| cb),
    })
}

/// Named constructed instances used for sampled checks at larger `r`.
pub fn sample_fixtures() -> Vec<(String, ColoredBiclique)> {
    let mut out = Vec::new();
    for r in 2..=5 {
        out.push((format!("gstar({r})"), gstar(r).expect("r >= 2")));
    }
    for r in 1..=6 {
        out.push((format!("doubling({r})"), doubling(r).expect("r >= 1")));
    }
    for s in 3..=4 {
        out.push((format!("ham_factor({s})"), ham_factor(s).expect("s >= 3")));
    }
    for r in 1..=6 {
        out.push((format!("latin({r})"), cyclic_latin_square(r).expect("r >= 1")));
    }
    out.push(("klein-latin(4)".into(), klein_latin_square()));
    out
}

/// The Cayley table of the Klein four-group, colors 1..=4.
pub fn klein_latin_square() -> ColoredBiclique {
    let colors = (0..16u16).map(|k| ((k / 4) ^ (k % 4)) + 1).collect();
    ColoredBiclique::new(4, 4, 4, colors).expect("valid square")
}

/// Checks `claim` on `fixtures` with `r` colors (all of them if `r` is `None`).
pub fn run_sampled(
    claim: Claim,
    fixtures: &[(String, ColoredBiclique)],
    r: Option<usize>,
    bound: Option<usize>,
) -> ClaimReport {
    let chosen: Vec<&(String, ColoredBiclique)> =
        fixtures.iter().filter(|(_, cb)| r.is_none_or(|r| cb.r() == r)).collect();
    let mut report = ClaimReport {
        claim,
        mode: SweepMode::Sampled,
        space: format!(
            "sampled, not exhaustive: {}",
            chosen.iter().map(|(name, _)| name.as_str()).collect::<Vec<_>>().join(", ")
        ),
        instances: 0,
        premise_hits: 0,
        ambiguous: 0,
        bound: None,
        passed: true,
        witness: None,
    };
    for (_, cb) in chosen {
        let b = bound.unwrap_or(default_cover_bound(cb.r()));
        if claim == Claim::Cover {
            report.bound = Some(b);
        }
        let check = claim.check(cb, b);
        report.instances += 1;
        report.premise_hits += check.premise as usize;
        report.ambiguous += check.ambiguous as usize;
        if !check.holds && report.passed {
            report.passed = false;
            report.witness = Some(cb.clone());
        }
    }
    report
}

/// Runs every claim that applies to `spec.r`: exhaustive sweeps over shapes
/// up to `spec.m x spec.n` where the guard allows, and sampled checks on
/// constructed instances for the antichain statements at `r = 4, 5`.
pub fn verify_small_r_claims(spec: EnumSpec) -> Result<Vec<ClaimReport>> {
    let mut reports = Vec::new();
    let r = spec.r;
    if r <= 2 {
        reports.push(run_exhaustive(Claim::Prop41, spec, None)?);
    }
    if r == 3 {
        reports.push(run_exhaustive(Claim::Prop42, spec, None)?);
    }
    if r <= 3 {
        reports.push(run_exhaustive(Claim::Cor43, spec, None)?);
        reports.push(run_exhaustive(Claim::WidthBound, spec, None)?);
        reports.push(run_exhaustive(Claim::AntichainWidth, spec, None)?);
    } else {
        let fixtures = sample_fixtures();
        reports.push(run_sampled(Claim::WidthBound, &fixtures, Some(r), None));
        reports.push(run_sampled(Claim::AntichainWidth, &fixtures, Some(r), None));
        if r == 5 {
            reports.push(run_sampled(Claim::Lemma52, &fixtures, Some(r), None));
        }
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claim_names_round_trip() {
        for c in Claim::ALL {
            assert_eq!(c.name().parse::<Claim>().unwrap(), c);
        }
        assert!("prop99".parse::<Claim>().is_err());
    }

    #[test]
    fn cover_conjecture_small() {
        for m in 1..=3 {
            for n in 1..=3 {
                let spec = EnumSpec::new(2, m, n);
                assert_eq!(verify_cover_conjecture(spec, 2).unwrap(), None);
            }
        }
        let cex = verify_cover_conjecture(EnumSpec::new(2, 2, 2), 0).unwrap();
        assert_eq!(cex, Some(ColoredBiclique::monochromatic(2, 2, 2).unwrap()));
    }

    #[test]
    fn prop41_and_cor43_small() {
        let spec = EnumSpec::new(2, 3, 3);
        assert!(run_exhaustive(Claim::Prop41, spec, None).unwrap().passed);
        let spec = EnumSpec::new(3, 3, 3).canonical(true);
        let report = run_exhaustive(Claim::Cor43, spec, None).unwrap();
        assert!(report.passed);
        assert!(report.premise_hits > 0);
    }

    #[test]
    fn statements_on_fixtures() {
        let fixtures = sample_fixtures();
        let d4 = fixtures.iter().find(|(n, _)| n == "doubling(4)").unwrap();
        assert!(Claim::AntichainWidth.check(&d4.1, 0).holds);
        let widths: Vec<usize> = WidthReport::new(&d4.1).per_color.iter().map(|w| w.nontrivial).collect();
        assert_eq!(widths, vec![8, 8, 4, 2]);
        assert!(widths.iter().any(|&w| w <= 4));
        let h3 = ham_factor(3).unwrap();
        assert!(WidthReport::new(&h3).per_color.iter().all(|w| w.nontrivial <= 8));
        let report = run_sampled(Claim::AntichainWidth, &fixtures, None, None);
        assert!(report.passed);
        assert!(report.space.starts_with("sampled, not exhaustive"));
        assert!(klein_latin_square() != cyclic_latin_square(4).unwrap());
        assert!(analysis::is_antichain(&klein_latin_square()).unwrap());
    }

    #[test]
    fn prop42_readings() {
        // four nontrivial color-1 components force a spanning two-component class
        let cb = ColoredBiclique::from_rows(
            3,
            &[vec![1, 2, 2, 3], vec![2, 1, 3, 2], vec![2, 3, 1, 2], vec![3, 2, 2, 1]],
        )
        .unwrap();
        if analysis::is_all_bi_equivalence(&cb) {
            let check = Claim::Prop42.check(&cb, 0);
            assert!(check.holds);
        }
    }

    #[test]
    fn small_r_bundle() {
        let reports = verify_small_r_claims(EnumSpec::new(2, 3, 3)).unwrap();
        assert!(reports.iter().all(|r| r.passed));
        let reports = verify_small_r_claims(EnumSpec::new(5, 1, 1)).unwrap();
        assert!(reports.iter().all(|r| r.mode == SweepMode::Sampled && r.passed));
        assert!(reports.iter().any(|r| r.claim == Claim::Lemma52));
    }
}
