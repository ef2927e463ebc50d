//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Every comparison is exact unless a tolerance is stated below.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use centrality_core::centralization::{
    centralization_from_relative, centralization_from_scores, relative_centrality,
};
use centrality_core::closed_forms::{
    enumerate_tree_values, star_and_complete_centrality, tree_branch_decomposition,
    tree_centrality_value, Extreme,
};
use centrality_core::engine::{betweenness_float_with, interior_credit};
use centrality_core::generators::{random_connected_graph, random_tree};
use centrality_core::{
    betweenness_bruteforce, betweenness_exact, closed_form, default_range, family_grid, generate,
    BigRational, EngineConfig, Family, FamilySpec, FormulaResult, Graph, ScoreVector,
};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const GRID_TIME_LIMIT: Duration = Duration::from_secs(60);
const BRUTEFORCE_MAX_ORDER: usize = 12;
const RANDOM_GRAPHS: usize = 200;
const RANDOM_GRAPH_SEED: u64 = 0x5eed_0002;
const RANDOM_TREES: usize = 500;
const RANDOM_TREE_MAX_ORDER: usize = 40;
const RANDOM_TREE_SEED: u64 = 0x5eed_0003;
const FLOAT_ABS_TOLERANCE: f64 = 1e-9;
const FLOAT_MAX_ORDER: usize = 1000;
const LARGE_CYCLE: usize = 10_000;
const LARGE_CYCLE_TIME_LIMIT: Duration = Duration::from_secs(30);
const LARGE_CYCLE_REL_TOLERANCE: f64 = 1e-6;

fn r(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

struct Instance {
    spec: FamilySpec,
    graph: Graph,
    exact: ScoreVector,
    formula: FormulaResult,
}

#[derive(Default)]
struct Outcome {
    failures: Vec<String>,
}

impl Outcome {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok && self.failures.len() < 5 {
            self.failures.push(what());
        } else if !ok {
            self.failures.push(String::new());
        }
    }

    fn report(self, label: &str, detail: &str) -> bool {
        let ok = self.failures.is_empty();
        println!("{} {label}: {detail}", if ok { "PASS" } else { "FAIL" });
        for f in self.failures.iter().filter(|f| !f.is_empty()) {
            println!("    {f}");
        }
        if self.failures.len() > 5 {
            println!("    ... {} failures in total", self.failures.len());
        }
        ok
    }
}

fn grid() -> (Vec<Instance>, Duration) {
    let start = Instant::now();
    let mut out = Vec::new();
    for family in Family::ALL.iter().copied().filter(|&f| f != Family::Tree) {
        for spec in family_grid(family, default_range(family)) {
            let graph = generate(&spec).expect("grid spec generates");
            let exact = betweenness_exact(&graph);
            let formula = closed_form(&spec).expect("grid spec has a closed form");
            out.push(Instance {
                spec,
                graph,
                exact,
                formula,
            });
        }
    }
    (out, start.elapsed())
}

fn random_graphs() -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_GRAPH_SEED);
    (0..RANDOM_GRAPHS)
        .map(|_| {
            let n = rng.gen_range(4..=12);
            let p = rng.gen_range(0.3..=0.8);
            random_connected_graph(n, p, &mut rng)
        })
        .collect()
}

fn random_trees() -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_TREE_SEED);
    (0..RANDOM_TREES)
        .map(|_| {
            let order = rng.gen_range(2..=RANDOM_TREE_MAX_ORDER);
            generate(&random_tree(order, &mut rng)).expect("random tree is valid")
        })
        .collect()
}

fn formula_grid(grid: &[Instance], elapsed: Duration) -> bool {
    let mut o = Outcome::default();
    for inst in grid {
        o.check(inst.formula.per_vertex == inst.exact, || {
            format!("{}: closed form differs from exact engine", inst.spec)
        });
    }
    o.check(elapsed < GRID_TIME_LIMIT, || {
        format!("grid took {elapsed:?}")
    });
    o.report(
        "1 formula vs exact engine over the validation grid",
        &format!(
            "{} instances, exact equality, {:.1}s (limit {}s)",
            grid.len(),
            elapsed.as_secs_f64(),
            GRID_TIME_LIMIT.as_secs()
        ),
    )
}

fn engine_cross_check(grid: &[Instance], random: &[(Graph, ScoreVector)]) -> bool {
    let mut o = Outcome::default();
    let mut count = 0;
    for inst in grid
        .iter()
        .filter(|i| i.graph.order() <= BRUTEFORCE_MAX_ORDER)
    {
        count += 1;
        let brute = betweenness_bruteforce(&inst.graph).expect("within brute-force cap");
        o.check(brute == inst.exact, || {
            format!("{}: engines disagree", inst.spec)
        });
    }
    for (i, (g, exact)) in random.iter().enumerate() {
        let brute = betweenness_bruteforce(g).expect("within brute-force cap");
        o.check(&brute == exact, || {
            format!("random graph #{i} (n={}): engines disagree", g.order())
        });
    }
    o.report(
        "2 exact engine vs brute-force enumeration",
        &format!(
            "{count} family instances with n <= {BRUTEFORCE_MAX_ORDER} + {} random graphs (seed {RANDOM_GRAPH_SEED:#x}), exact equality",
            random.len()
        ),
    )
}

fn tree_theorem(trees: &[(Graph, ScoreVector)]) -> bool {
    let mut o = Outcome::default();
    for (i, (t, exact)) in trees.iter().enumerate() {
        for v in 0..t.order() {
            let decomposition = tree_branch_decomposition(t, v).expect("tree decomposes");
            let value =
                tree_centrality_value(&decomposition.branch_sizes).expect("nonempty branches");
            o.check(&value == exact.get(v), || {
                format!(
                    "tree #{i} vertex {v}: branch formula {value}, engine {}",
                    exact.get(v)
                )
            });
        }
    }
    o.report(
        "3 tree branch formula vs exact engine",
        &format!(
            "{} random trees of order <= {RANDOM_TREE_MAX_ORDER} (seed {RANDOM_TREE_SEED:#x}), every vertex, exact equality",
            trees.len()
        ),
    )
}

fn golden_values() -> bool {
    let mut o = Outcome::default();

    let tree = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (1, 4), (4, 5), (4, 6)]).unwrap();
    let expected =
        ScoreVector::from_ratios(&[(0, 1), (11, 1), (5, 1), (0, 1), (9, 1), (0, 1), (0, 1)]);
    o.check(betweenness_exact(&tree) == expected, || {
        "seven-vertex tree scores".into()
    });
    let by_formula: Vec<BigRational> = (0..7)
        .map(|v| {
            tree_centrality_value(&tree_branch_decomposition(&tree, v).unwrap().branch_sizes)
                .unwrap()
        })
        .collect();
    o.check(by_formula == expected.scores(), || {
        "seven-vertex tree branch values".into()
    });

    let table: [(&[usize], i64); 22] = [
        (&[1, 1, 1, 1, 1, 1, 1, 1], 28),
        (&[2, 1, 1, 1, 1, 1, 1], 27),
        (&[2, 2, 1, 1, 1, 1], 26),
        (&[3, 1, 1, 1, 1, 1], 25),
        (&[2, 2, 2, 1, 1], 25),
        (&[3, 2, 1, 1, 1], 24),
        (&[4, 1, 1, 1, 1], 22),
        (&[2, 2, 2, 2], 24),
        (&[3, 2, 2, 1], 23),
        (&[3, 3, 1, 1], 22),
        (&[5, 1, 1, 1], 18),
        (&[4, 2, 1, 1], 21),
        (&[3, 3, 2], 21),
        (&[4, 2, 2], 20),
        (&[4, 3, 1], 19),
        (&[5, 2, 1], 17),
        (&[6, 1, 1], 13),
        (&[4, 4], 16),
        (&[5, 3], 15),
        (&[6, 2], 12),
        (&[7, 1], 7),
        (&[8], 0),
    ];
    let rows = enumerate_tree_values(9).expect("order 9 table");
    o.check(rows.len() == table.len(), || {
        format!("order-9 table has {} rows", rows.len())
    });
    for (parts, value) in table {
        let found = rows.iter().find(|(p, _)| p.as_slice() == parts);
        o.check(found.is_some_and(|(_, v)| *v == r(value, 1)), || {
            format!(
                "order-9 row {parts:?} expected {value}, got {:?}",
                found.map(|f| f.1.to_string())
            )
        });
        o.check(
            tree_centrality_value(parts).ok() == Some(r(value, 1)),
            || format!("branch value of {parts:?}"),
        );
    }

    let w5 = betweenness_exact(&generate(&FamilySpec::Wheel(5)).unwrap());
    o.check(
        w5 == ScoreVector::from_ratios(&[(2, 3), (1, 3), (1, 3), (1, 3), (1, 3)]),
        || "W5 scores".into(),
    );
    let q3 = betweenness_exact(&generate(&FamilySpec::Hypercube(3)).unwrap());
    o.check(q3.scores().iter().all(|x| *x == r(5, 2)), || {
        "Q3 scores".into()
    });
    let cl5 = betweenness_exact(&generate(&FamilySpec::CircularLadder(5)).unwrap());
    o.check(cl5.scores().iter().all(|x| *x == r(4, 1)), || {
        "CL5 scores".into()
    });
    let k23 = betweenness_exact(&generate(&FamilySpec::CompleteBipartite(2, 3)).unwrap());
    o.check(
        k23 == ScoreVector::from_ratios(&[(3, 2), (3, 2), (1, 3), (1, 3), (1, 3)]),
        || "K2,3 scores".into(),
    );

    for n in 3..=40 {
        let star = betweenness_exact(&generate(&FamilySpec::Star(n)).unwrap());
        o.check(
            centralization_from_scores(&star).ok() == Some(r(1, 1)),
            || format!("star S{n} centralization"),
        );
        let complete = betweenness_exact(&generate(&FamilySpec::Complete(n)).unwrap());
        o.check(
            centralization_from_scores(&complete).ok() == Some(r(0, 1)),
            || format!("complete K{n} centralization"),
        );
        let star_formula = star_and_complete_centrality(n, Extreme::Star).unwrap();
        o.check(star_formula.centralization == Some(r(1, 1)), || {
            format!("star S{n} closed form")
        });
        let complete_formula = star_and_complete_centrality(n, Extreme::Complete).unwrap();
        o.check(complete_formula.centralization == Some(r(0, 1)), || {
            format!("complete K{n} closed form")
        });
    }

    o.report(
        "4 golden values",
        "7-vertex tree, 22 order-9 rows, W5, Q3, CL5, K2,3, star/complete centralization n=3..40, exact",
    )
}

fn centralization_identities(grid: &[Instance], others: &[&[(Graph, ScoreVector)]]) -> bool {
    let mut o = Outcome::default();
    let mut vectors = 0;
    let all_vectors = grid
        .iter()
        .map(|i| &i.exact)
        .chain(others.iter().flat_map(|set| set.iter().map(|(_, s)| s)));
    for scores in all_vectors.filter(|s| s.n() >= 3) {
        vectors += 1;
        let direct = centralization_from_scores(scores).unwrap();
        let via_relative =
            centralization_from_relative(&relative_centrality(scores).unwrap()).unwrap();
        o.check(direct == via_relative, || {
            format!("n={}: routes give {direct} and {via_relative}", scores.n())
        });
        o.check(direct >= BigRational::zero() && direct <= r(1, 1), || {
            format!("n={}: centralization {direct} outside [0,1]", scores.n())
        });
    }
    let mut displays = 0;
    for inst in grid.iter().filter(|i| i.graph.order() >= 3) {
        displays += 1;
        let f = &inst.formula;
        o.check(
            f.relative == relative_centrality(&f.per_vertex).ok(),
            || format!("{}: relative display differs from recomputation", inst.spec),
        );
        o.check(
            f.centralization == centralization_from_scores(&f.per_vertex).ok(),
            || {
                format!(
                    "{}: centralization display differs from recomputation",
                    inst.spec
                )
            },
        );
    }
    o.report(
        "5 centralization routes agree; family displays match recomputation",
        &format!("{vectors} score vectors, {displays} family displays, exact equality"),
    )
}

fn sum_identity(grid: &[Instance], random: &[(Graph, ScoreVector)]) -> bool {
    let mut o = Outcome::default();
    let pairs = grid
        .iter()
        .map(|i| (i.spec.to_string(), &i.graph, &i.exact))
        .chain(
            random
                .iter()
                .enumerate()
                .map(|(k, (g, s))| (format!("random #{k}"), g, s)),
        );
    let mut count = 0;
    for (name, g, scores) in pairs {
        count += 1;
        let credit = BigRational::from_integer(interior_credit(g));
        o.check(scores.total() == credit, || {
            format!(
                "{name}: total {} but interior credit {credit}",
                scores.total()
            )
        });
    }
    o.report(
        "6 total score equals summed interior path length",
        &format!("{count} graphs, exact equality"),
    )
}

fn float_engine(grid: &[Instance]) -> bool {
    let mut o = Outcome::default();
    let mut worst = 0.0f64;
    let mut count = 0;
    let config = EngineConfig::default();
    for inst in grid.iter().filter(|i| i.graph.order() <= FLOAT_MAX_ORDER) {
        count += 1;
        let float = betweenness_float_with(&inst.graph, &config);
        let exact = inst.exact.to_f64();
        let diff = float
            .iter()
            .zip(&exact)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        worst = worst.max(diff);
        o.check(diff <= FLOAT_ABS_TOLERANCE, || {
            format!("{}: float off by {diff:e}", inst.spec)
        });
    }

    let cycle = generate(&FamilySpec::Cycle(LARGE_CYCLE)).unwrap();
    let start = Instant::now();
    let scores = betweenness_float_with(&cycle, &EngineConfig::single_threaded());
    let elapsed = start.elapsed();
    let target = ((LARGE_CYCLE - 2) as f64).powi(2) / 8.0;
    let rel = scores
        .iter()
        .map(|x| (x - target).abs() / target)
        .fold(0.0, f64::max);
    o.check(elapsed < LARGE_CYCLE_TIME_LIMIT, || {
        format!("C{LARGE_CYCLE} took {elapsed:?}")
    });
    o.check(rel <= LARGE_CYCLE_REL_TOLERANCE, || {
        format!("C{LARGE_CYCLE} relative error {rel:e}")
    });
    o.report(
        "7 float engine accuracy and speed",
        &format!(
            "{count} grid instances within {FLOAT_ABS_TOLERANCE:e} absolute (worst {worst:e}); \
             C{LARGE_CYCLE} single-threaded in {:.2}s (limit {}s), relative error {rel:e} (limit {LARGE_CYCLE_REL_TOLERANCE:e})",
            elapsed.as_secs_f64(),
            LARGE_CYCLE_TIME_LIMIT.as_secs()
        ),
    )
}

fn vertex_transitivity(grid: &[Instance]) -> bool {
    let mut o = Outcome::default();
    let mut count = 0;
    for inst in grid
        .iter()
        .filter(|i| i.spec.family().is_vertex_transitive())
    {
        count += 1;
        o.check(inst.exact.is_uniform(), || {
            format!("{}: scores not uniform", inst.spec)
        });
        if inst.graph.order() >= 3 {
            o.check(
                centralization_from_scores(&inst.exact).ok() == Some(BigRational::zero()),
                || format!("{}: centralization not zero", inst.spec),
            );
        }
    }
    o.report(
        "8 vertex-transitive families have uniform scores and zero centralization",
        &format!(
            "{count} instances (complete, cocktail, crown, cycle, circladder, hypercube), exact"
        ),
    )
}

fn main() -> ExitCode {
    let (grid, grid_time) = grid();
    let random: Vec<(Graph, ScoreVector)> = random_graphs()
        .into_iter()
        .map(|g| {
            let s = betweenness_exact(&g);
            (g, s)
        })
        .collect();
    let trees: Vec<(Graph, ScoreVector)> = random_trees()
        .into_iter()
        .map(|t| {
            let s = betweenness_exact(&t);
            (t, s)
        })
        .collect();

    let results = [
        formula_grid(&grid, grid_time),
        engine_cross_check(&grid, &random),
        tree_theorem(&trees),
        golden_values(),
        centralization_identities(&grid, &[&random, &trees]),
        sum_identity(&grid, &random),
        float_engine(&grid),
        vertex_transitivity(&grid),
    ];
    let failed = results.iter().filter(|ok| !**ok).count();
    println!(
        "acceptance: {} passed, {failed} failed",
        results.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
