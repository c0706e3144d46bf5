//! Sweeps every dimension formula and certificate over small instances and
//! records computed against expected values.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::chromatic::{chromatic_polynomial, hodge_dimension_profile};
use crate::complexes::{
    build_coloring_complex, build_cyclic_complement, build_cyclic_complex, build_en_complex, build_tree_complex,
    filtered_boundary_split, ChainComplexRep,
};
use crate::error::{Error, Result};
use crate::homology::{betti_numbers, is_cycle, RankMode};
use crate::hypercore::{binomial_i, Hypergraph};
use crate::repn::{
    character_row, hook_row, hopf_trace_sides, partitions_of, standard_cycles, ActingGroup,
};
use crate::shelling::{
    facet_order, homology_facets, restriction_closed_form, restrictions_by_definition, verify_shelling, ShellingMode,
};

/// Largest vertex count the battery accepts.
pub const MAX_BATTERY_N: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BatteryScope {
    Coloring,
    Cyclic,
    Characters,
    All,
}

impl BatteryScope {
    fn includes(self, other: BatteryScope) -> bool {
        self == BatteryScope::All || self == other
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub instance: String,
    pub expected: Value,
    pub computed: Value,
    pub pass: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BatteryReport {
    pub scope: BatteryScope,
    pub nmax: usize,
    pub summary: BTreeMap<String, Tally>,
    pub checks: Vec<CheckResult>,
    pub all_pass: bool,
}

struct Recorder {
    checks: Vec<CheckResult>,
}

impl Recorder {
    fn record(&mut self, check: &str, instance: String, expected: Value, computed: Value) {
        let pass = expected == computed;
        self.checks.push(CheckResult { check: check.to_string(), instance, expected, computed, pass });
    }
}

fn betti_map(c: &ChainComplexRep) -> Result<BTreeMap<isize, usize>> {
    Ok(betti_numbers(c, RankMode::default())?.betti)
}

fn binom(n: isize, k: isize) -> usize {
    binomial_i(n as i64, k as i64) as usize
}

/// Runs every check in `scope` for vertex counts up to `nmax`.
pub fn run_battery(scope: BatteryScope, nmax: usize) -> Result<BatteryReport> {
    if nmax > MAX_BATTERY_N {
        return Err(Error::TooLarge(format!("nmax = {nmax} exceeds {MAX_BATTERY_N}")));
    }
    let mut rec = Recorder { checks: Vec::new() };
    if scope.includes(BatteryScope::Coloring) {
        coloring_checks(&mut rec, nmax)?;
    }
    if scope.includes(BatteryScope::Cyclic) {
        cyclic_checks(&mut rec, nmax)?;
    }
    if scope.includes(BatteryScope::Characters) {
        character_checks(&mut rec, nmax)?;
    }
    let mut summary: BTreeMap<String, Tally> = BTreeMap::new();
    for c in &rec.checks {
        let t = summary.entry(c.check.clone()).or_default();
        if c.pass {
            t.passed += 1;
        } else {
            t.failed += 1;
        }
    }
    let all_pass = rec.checks.iter().all(|c| c.pass);
    Ok(BatteryReport { scope, nmax, summary, checks: rec.checks, all_pass })
}

fn shellable_instances(nmax: usize) -> Result<Vec<(String, Hypergraph)>> {
    let mut out = Vec::new();
    for n in 3..=nmax {
        for k in n / 2 + 1..n {
            if k >= 2 {
                out.push((format!("complete({n},{k})"), Hypergraph::complete(n, k)?));
            }
        }
    }
    for n in 3..=nmax.min(7) {
        for k in 2..n {
            for v in 1..=n {
                out.push((format!("star({n},{k},{v})"), Hypergraph::star(n, k, v)?));
            }
        }
    }
    Ok(out)
}

fn coloring_checks(rec: &mut Recorder, nmax: usize) -> Result<()> {
    for (name, h) in shellable_instances(nmax)? {
        let n = h.n();
        let k = h.uniformity().unwrap_or(0);
        let top = n as isize - k as isize - 1;
        let chi = chromatic_polynomial(&h)?;
        let rank = chi.abs_coefficient_sum() as usize - 1;
        let computed = betti_map(&build_coloring_complex(&h)?)?;
        let expected: BTreeMap<isize, usize> = computed.keys().map(|&r| (r, if r == top { rank } else { 0 })).collect();
        rec.record("coloring-betti-concentration", name.clone(), json!(expected), json!(computed));

        let hodge = hodge_dimension_profile(&h, k)?;
        rec.record("hodge-total", name.clone(), json!(rank), json!(hodge.total));

        let order = facet_order(&h)?;
        let closed: Vec<_> = order.iter().map(restriction_closed_form).collect();
        let defined = restrictions_by_definition(&order);
        let mismatches = closed.iter().zip(&defined).filter(|(a, b)| a != b).count();
        rec.record("restriction-closed-form", name.clone(), json!(0), json!(mismatches));
        let cert = verify_shelling(&h, &order, &closed, ShellingMode::Both)?;
        rec.record(
            "shelling-certificate",
            name.clone(),
            json!({"prop25": true, "direct": true}),
            json!({"prop25": cert.prop25, "direct": cert.direct}),
        );

        rec.record("homology-facet-count", name, json!(rank), json!(homology_facets(&h)?.len()));
    }
    Ok(())
}

fn cyclic_checks(rec: &mut Recorder, nmax: usize) -> Result<()> {
    for n in 3..=nmax {
        let ni = n as isize;
        let c = build_en_complex(n)?;
        let computed = betti_map(&c)?;
        let expected: BTreeMap<isize, usize> = c.degrees().map(|r| (r, binom(ni - 1, r + 1))).collect();
        rec.record("en-cyclic-betti", format!("E_{n}"), json!(expected), json!(computed));

        let mut annihilated = true;
        let mut cycles_ok = true;
        for r in c.degrees() {
            let (_, m1) = filtered_boundary_split(&c, r)?;
            for x in standard_cycles(n, r)? {
                let coords = c.coordinates(&x)?;
                annihilated &= m1.mul_sparse(&coords).is_empty();
                cycles_ok &= is_cycle(&c, &x)?;
            }
        }
        rec.record(
            "standard-cycles",
            format!("E_{n}"),
            json!({"cycles": true, "grading-raising-part-vanishes": true}),
            json!({"cycles": cycles_ok, "grading-raising-part-vanishes": annihilated}),
        );

        for k in 3..n {
            let ki = k as isize;
            let star = build_cyclic_complex(&Hypergraph::star(n, k, 1)?)?;
            let computed = betti_map(&star)?;
            let computed: BTreeMap<isize, usize> =
                computed.into_iter().filter(|&(r, _)| r < ni - ki).collect();
            let expected: BTreeMap<isize, usize> = computed.keys().map(|&r| (r, binom(ni - 1, r + 1))).collect();
            rec.record("star-cyclic-betti", format!("star({n},{k},1)"), json!(expected), json!(computed));

            let comp = betti_map(&build_cyclic_complement(n, k, None)?)?;
            let mut expected = BTreeMap::new();
            let mut computed = BTreeMap::new();
            for r in ni - ki..=ni - 2 {
                let e = if r == ni - ki {
                    binom(ni - 1, ni - ki - 1) + binom(ni - 1, ni - ki + 1)
                } else {
                    binom(ni - 1, r + 1)
                };
                expected.insert(r, e);
                computed.insert(r, comp.get(&r).copied().unwrap_or(0));
            }
            rec.record("complement-betti", format!("complete({n},{k})"), json!(expected), json!(computed));

            let full = betti_map(&build_cyclic_complex(&Hypergraph::complete(n, k)?)?)?;
            let top = ni - ki - 1;
            rec.record(
                "complete-cyclic-top-betti",
                format!("complete({n},{k})"),
                json!(binom(ni, ni - ki)),
                json!(full.get(&top).copied().unwrap_or(0)),
            );
            if k + 1 == n || k + 2 == n {
                let expected: BTreeMap<isize, usize> = (-1..=top).map(|r| (r, binom(ni, r + 1))).collect();
                let computed: BTreeMap<isize, usize> =
                    (-1..=top).map(|r| (r, full.get(&r).copied().unwrap_or(0))).collect();
                rec.record("complete-cyclic-profile", format!("complete({n},{k})"), json!(expected), json!(computed));
            }
        }
    }
    for n in 3..=nmax.min(7) {
        let ni = n as isize;
        for (name, tree) in [("star-tree", Hypergraph::star_tree(n)?), ("path-tree", Hypergraph::path_tree(n)?)] {
            for l in 0..n {
                let li = l as isize;
                let b = betti_map(&build_tree_complex(&tree, l)?)?;
                let expected: BTreeMap<isize, usize> =
                    (-1..=ni - 3).map(|r| (r, binom(ni - (li + 1), (r + 2) - (li + 1)))).collect();
                let computed: BTreeMap<isize, usize> =
                    (-1..=ni - 3).map(|r| (r, b.get(&r).copied().unwrap_or(0))).collect();
                rec.record("tree-complex-betti", format!("{name}({n}), l={l}"), json!(expected), json!(computed));
            }
        }
    }
    Ok(())
}

fn character_checks(rec: &mut Recorder, nmax: usize) -> Result<()> {
    if nmax >= 3 {
        let c = build_en_complex(3)?;
        rec.record("character-table", "E_3, r=0".into(), json!([2, 0, -1]), json!(character_row(&c, 0)?.values()));
    }
    if nmax >= 4 {
        let c = build_en_complex(4)?;
        rec.record(
            "character-table",
            "E_4, r=0".into(),
            json!([3, 1, -1, 0, -1]),
            json!(character_row(&c, 0)?.values()),
        );
        let hook: Vec<i64> = partitions_of(4)
            .iter()
            .map(|t| crate::repn::murnaghan_nakayama(&[2, 1, 1], t))
            .collect::<Result<_>>()?;
        rec.record("character-table", "E_4, r=1".into(), json!(hook), json!(character_row(&c, 1)?.values()));
    }
    for n in 3..=nmax.min(7) {
        let c = build_en_complex(n)?;
        for r in c.degrees() {
            let row = character_row(&c, r)?;
            let hook = hook_row(n, (r + 1) as usize, ActingGroup::Symmetric, r)?;
            rec.record("hook-characters", format!("E_{n}, r={r}"), json!(hook), json!(row));
        }
        for t in partitions_of(n) {
            let (chain, hook) = hopf_trace_sides(&c, &t)?;
            rec.record("hopf-trace", format!("E_{n}, {t}"), json!(hook), json!(chain));
        }
        for k in 3..n {
            let star = build_cyclic_complex(&Hypergraph::star(n, k, 1)?)?;
            for r in -1..=(n as isize - k as isize - 1) {
                let row = character_row(&star, r)?;
                let hook = hook_row(n, (r + 1) as usize, ActingGroup::StabilizerOfOne, r)?;
                rec.record("star-hook-characters", format!("star({n},{k},1), r={r}"), json!(hook), json!(row));
            }
        }
    }
    Ok(())
}
