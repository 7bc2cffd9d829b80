//! One function per subcommand, each returning its JSON payload and verdict.

use serde::Serialize;
use serde_json::{json, Value};

use trialgebra::acceptance::Acceptance;
use trialgebra::combinatorics::{
    enumerate_cube_cells, enumerate_subsets, enumerate_subsets_by_size, enumerate_trees,
    enumerate_trees_by_vertices, Family,
};
use trialgebra::homology::{homology_report, Theory};
use trialgebra::koszul::duality_report;
use trialgebra::series::series_report;
use trialgebra::suite::{axiom_report, AxiomTheory, RandomSweep};
use trialgebra::Result;

use crate::{
    AxiomTheoryArg, AxiomsArgs, BasisSet, Command, EnumerateArgs, FamilyArg, HomologyArgs,
    HomologyTheory, SeriesArgs, SeriesCheck,
};

/// `(command name, params, result payload, passed)`.
pub type Outcome = (&'static str, Value, Value, bool);

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report payloads serialize")
}

pub fn run(command: &Command) -> Result<Outcome> {
    match command {
        Command::Enumerate(a) => Ok(enumerate(a)),
        Command::Axioms(a) => Ok(axioms(a)),
        Command::Koszul => koszul(),
        Command::Homology(a) => homology(a),
        Command::Series(a) => series(a),
        Command::All => all(),
    }
}

fn listing<T: Serialize>(items: &[T], list: bool) -> (usize, Option<Value>) {
    (items.len(), list.then(|| to_value(&items)))
}

fn enumerate(a: &EnumerateArgs) -> Outcome {
    let n = a.n as usize;
    let (count, objects) = match a.what {
        BasisSet::Trees => listing(&enumerate_trees(n), a.list),
        BasisSet::Subsets => listing(&enumerate_subsets(n), a.list),
        BasisSet::Cubes => listing(&enumerate_cube_cells(n), a.list),
    };
    let by_grade = a.by_grade.then(|| -> Vec<usize> {
        match a.what {
            BasisSet::Trees => (1..=n)
                .map(|k| enumerate_trees_by_vertices(n, k).len())
                .collect(),
            BasisSet::Subsets => (1..=n)
                .map(|k| enumerate_subsets_by_size(n, k).len())
                .collect(),
            BasisSet::Cubes => {
                let mut counts = vec![0; n + 1];
                for c in enumerate_cube_cells(n) {
                    counts[c.dimension()] += 1;
                }
                counts
            }
        }
    });
    let mut result = json!({ "count": count });
    if let Some(g) = by_grade {
        let first = if a.what == BasisSet::Cubes { 0 } else { 1 };
        result["by_grade"] = json!({ "first_grade": first, "counts": g });
    }
    if let Some(o) = objects {
        result["objects"] = o;
    }
    ("enumerate", to_value(a), result, true)
}

fn axioms(a: &AxiomsArgs) -> Outcome {
    let theory = match a.theory {
        AxiomTheoryArg::Trias => AxiomTheory::Trias,
        AxiomTheoryArg::Tridend => AxiomTheory::Tridend,
        AxiomTheoryArg::Tricub => AxiomTheory::Tricub,
        AxiomTheoryArg::Qsym => AxiomTheory::Qsym,
        AxiomTheoryArg::Solomon => AxiomTheory::Solomon,
    };
    let random = a.random.map(|count| RandomSweep {
        count,
        seed: a.seed,
    });
    let report = axiom_report(theory, a.max_weight as usize, random);
    let mut params = to_value(a);
    if a.random.is_none() {
        params
            .as_object_mut()
            .expect("params are an object")
            .remove("seed");
    }
    ("axioms", params, to_value(&report), report.passed)
}

fn koszul() -> Result<Outcome> {
    let r = duality_report()?;
    Ok(("koszul", json!({}), to_value(&r), r.passed()))
}

fn homology(a: &HomologyArgs) -> Result<Outcome> {
    let theory = match a.theory {
        HomologyTheory::Trias => Theory::Trias,
        HomologyTheory::Tridend => Theory::Tridend,
        HomologyTheory::Tricub => Theory::Tricub,
    };
    let r = homology_report(theory, a.weight as usize, a.per_class)?;
    Ok(("homology", to_value(a), to_value(&r), r.passed))
}

fn series(a: &SeriesArgs) -> Result<Outcome> {
    let r = series_report(a.order as usize)?;
    let mut checks = serde_json::Map::new();
    let mut put = |name: &str, ok: bool| {
        checks.insert(name.to_owned(), Value::Bool(ok));
    };
    let all = a.check == SeriesCheck::All;
    if all || a.check == SeriesCheck::Inverse {
        put(
            "simplex_after_associahedron_is_x",
            r.simplex_after_associahedron_is_x,
        );
        put(
            "associahedron_after_simplex_is_x",
            r.associahedron_after_simplex_is_x,
        );
    }
    if all || a.check == SeriesCheck::ClosedForm {
        put("simplex_closed_form", r.simplex_closed_form);
        put("cube_closed_form", r.cube_closed_form);
        put(
            "associahedron_closed_form",
            r.associahedron_closed_form_failure.is_none(),
        );
    }
    if all || a.check == SeriesCheck::SelfDual {
        put("cube_after_cube_is_x", r.cube_after_cube_is_x);
        put(
            "cube_symbolically_involutive",
            r.cube_symbolically_involutive,
        );
    }
    if all {
        put("catalan_at_t0", r.catalan_at_t0);
        put("super_catalan_at_t1", r.super_catalan_at_t1);
    }
    let passed = checks.values().all(|v| v == &Value::Bool(true));
    let mut tables = serde_json::Map::new();
    for (family, s) in [
        (Family::Simplex, &r.simplex),
        (Family::Associahedron, &r.associahedron),
        (Family::Cube, &r.cube),
    ] {
        let wanted = match a.family {
            None => true,
            Some(FamilyArg::Simplex) => family == Family::Simplex,
            Some(FamilyArg::Associahedron) => family == Family::Associahedron,
            Some(FamilyArg::Cube) => family == Family::Cube,
        };
        if wanted {
            tables.insert(family.name().to_owned(), to_value(s));
        }
    }
    let result = json!({ "checks": checks, "series": tables });
    Ok(("series", to_value(a), result, passed))
}

fn all() -> Result<Outcome> {
    let criteria = Acceptance::new().run_all()?;
    let passed = criteria.iter().all(|c| c.passed);
    Ok((
        "all",
        json!({}),
        json!({ "criteria": to_value(&criteria) }),
        passed,
    ))
}
