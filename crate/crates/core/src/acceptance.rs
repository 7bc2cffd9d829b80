//! The eight acceptance criteria of the workbench, shared by `trialg all`
//! and the `acceptance` test target.

use std::cell::OnceCell;

use serde::Serialize;

use crate::combinatorics::{
    enumerate_cube_cells, enumerate_subsets, enumerate_trees, enumerate_trees_by_vertices,
};
use crate::freetrias::{
    delta_rule_failures, delta_squared_violations, normal_form_violations, poisson_violations,
    SignReading,
};
use crate::freetridend::{alpha_violations, quasi_shuffle_disagreements};
use crate::homology::{homology_report, presimplicial_violations, ChainComplex, Theory};
use crate::koszul::{duality_report, RelationSpace};
use crate::relations::Op;
use crate::sampling::DEFAULT_SEED;
use crate::series::series_report;
use crate::suite::{axiom_report, AxiomReport, AxiomTheory, RandomSweep};
use crate::Result;

pub const CRITERIA: [&str; 8] = [
    "enumeration counts",
    "relation suites of the free models",
    "associativity of the total product",
    "Koszul duality of the relation spaces",
    "presimplicial identities and d∘d = 0",
    "acyclicity of the free complexes",
    "generating series and their inverses",
    "structural oracles",
];

/// Random triples per free model in criteria 2 and 3.
pub const RANDOM_TRIPLES: usize = 10_000;

#[derive(Debug, Clone, Serialize)]
pub struct Criterion {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    /// One line per sub-check.
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

impl Criterion {
    pub fn verdict(&self) -> &'static str {
        if self.passed {
            "PASS"
        } else {
            "FAIL"
        }
    }
}

/// Runs the criteria, sharing work between them (the axiom sweeps feed both
/// criterion 2 and criterion 3).
#[derive(Default)]
pub struct Acceptance {
    axioms: OnceCell<Vec<AxiomReport>>,
}

const FREE: [(AxiomTheory, usize); 3] = [
    (AxiomTheory::Trias, 7),
    (AxiomTheory::Tridend, 6),
    (AxiomTheory::Tricub, 7),
];

impl Acceptance {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn run(&self, id: usize) -> Result<Criterion> {
        let checks = match id {
            1 => enumeration(),
            2 => self.relations(),
            3 => self.star(),
            4 => koszul()?,
            5 => presimplicial()?,
            6 => acyclicity()?,
            7 => series()?,
            8 => oracles(),
            _ => return Err(crate::Error::Invariant(format!("no criterion {id}"))),
        };
        Ok(Criterion {
            id,
            name: CRITERIA[id - 1],
            passed: checks.iter().all(|c| c.passed),
            checks,
        })
    }

    pub fn run_all(&self) -> Result<Vec<Criterion>> {
        (1..=CRITERIA.len()).map(|id| self.run(id)).collect()
    }

    fn axioms(&self) -> &[AxiomReport] {
        self.axioms.get_or_init(|| {
            let random = Some(RandomSweep {
                count: RANDOM_TRIPLES,
                seed: DEFAULT_SEED,
            });
            FREE.iter()
                .map(|&(t, w)| axiom_report(t, w, random))
                .collect()
        })
    }

    fn relations(&self) -> Vec<Check> {
        self.axioms()
            .iter()
            .map(|r| {
                let ok = r.exhaustive.passed() && r.random.as_ref().is_some_and(|s| s.passed());
                let random = r.random.as_ref().map_or(0, |s| s.triples);
                check(
                    format!(
                        "{} weight <= {} plus {random} random triples",
                        r.theory.name(),
                        r.max_weight
                    ),
                    ok,
                )
            })
            .collect()
    }

    fn star(&self) -> Vec<Check> {
        self.axioms()
            .iter()
            .filter(|r| r.theory.checks_star())
            .map(|r| {
                let star = r.star.as_ref();
                let triples = star.map_or(0, |s| s.triples);
                check(
                    format!("{} * on {triples} triples", r.theory.name()),
                    star.is_some_and(|s| s.passed()),
                )
            })
            .collect()
    }
}

fn check(name: impl Into<String>, passed: bool) -> Check {
    Check {
        name: name.into(),
        passed,
    }
}

fn enumeration() -> Vec<Check> {
    let trees: Vec<usize> = (1..=5).map(|n| enumerate_trees(n).len()).collect();
    let graded: Vec<usize> = (1..=3)
        .map(|k| enumerate_trees_by_vertices(3, k).len())
        .collect();
    let subsets = (1..=8).all(|n| enumerate_subsets(n).len() == (1 << n) - 1);
    let cubes = (1..=8).all(|n| enumerate_cube_cells(n).len() == 3usize.pow(n as u32));
    vec![
        check(
            format!("|T_n| for n = 1..5 is {trees:?}"),
            trees == [1, 3, 11, 45, 197],
        ),
        check(
            format!("|T_3,k| for k = 1..3 is {graded:?}"),
            graded == [5, 5, 1],
        ),
        check("|P_n| = 2^n - 1 for n <= 8", subsets),
        check("|Q_n| = 3^n for n <= 8", cubes),
    ]
}

fn koszul() -> Result<Vec<Check>> {
    let r = duality_report()?;
    let ambient = RelationSpace::full(&Op::ALL).dim();
    Ok(vec![
        check(
            format!(
                "dimensions {}/{}/{}/{}",
                ambient, r.dim_trias, r.dim_tridend, r.dim_tricub
            ),
            ambient == 18 && r.passed(),
        ),
        check(
            "Trias^! = TriDend and TriDend^! = Trias",
            r.trias_dual_is_tridend && r.tridend_dual_is_trias,
        ),
        check("TriCub^! = TriCub", r.tricub_self_dual),
        check(
            format!(
                "{} of {} pairings vanish",
                r.pairings_zero, r.pairings_checked
            ),
            r.pairings_zero == r.pairings_checked,
        ),
        check("Dias^! = Dend", r.dias_dual_is_didend),
    ])
}

fn presimplicial() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for t in Theory::ALL {
        let mut bad = 0;
        for m in 1..=6 {
            // building the complex verifies d∘d = 0
            bad += presimplicial_violations(&ChainComplex::build(t, m)?)?;
        }
        out.push(check(
            format!("{} weight <= 6: {bad} violations", t.name()),
            bad == 0,
        ));
    }
    Ok(out)
}

fn acyclicity() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (t, top) in [
        (Theory::Trias, 6),
        (Theory::Tridend, 5),
        (Theory::Tricub, 6),
    ] {
        let per_class = t != Theory::Tridend;
        let mut ok = true;
        for m in 1..=top {
            ok &= homology_report(t, m, per_class)?.passed;
        }
        let scope = if per_class {
            ", per evaluation class"
        } else {
            ""
        };
        out.push(check(format!("{} weight <= {top}{scope}", t.name()), ok));
    }
    Ok(out)
}

fn series() -> Result<Vec<Check>> {
    let r = series_report(10)?;
    Ok(vec![
        check(
            "simplex and associahedron series are inverse",
            r.simplex_after_associahedron_is_x && r.associahedron_after_simplex_is_x,
        ),
        check(
            "cube series is an involution",
            r.cube_after_cube_is_x && r.cube_symbolically_involutive,
        ),
        check(
            "closed forms",
            r.simplex_closed_form
                && r.cube_closed_form
                && r.associahedron_closed_form_failure.is_none(),
        ),
        check(
            "Catalan and super-Catalan specialisations",
            r.catalan_at_t0 && r.super_catalan_at_t1,
        ),
    ])
}

fn oracles() -> Vec<Check> {
    let suite = |t| axiom_report(t, 6, None).passed;
    vec![
        check("α(t) = t for degree <= 5", alpha_violations(5) == 0),
        check(
            "normal forms of weight <= 5",
            normal_form_violations(5) == 0,
        ),
        check("δ∘δ = 0 for length <= 8", delta_squared_violations(8) == 0),
        check(
            "δ product rule for |X| + |Y| <= 7",
            delta_rule_failures(7, SignReading::SurvivingMarks).is_empty(),
        ),
        check(
            "Leibniz and Poisson identities for weight <= 6",
            poisson_violations(6) == 0,
        ),
        check(
            "QSym relations and quasi-shuffle oracle, weight <= 6",
            suite(AxiomTheory::Qsym) && quasi_shuffle_disagreements(6) == 0,
        ),
        check(
            "Solomon model relations, weight <= 6",
            suite(AxiomTheory::Solomon),
        ),
    ]
}
