//! Mechanical checks of the game's structural results over enumerated and
//! sampled instances.
//!
//! Every check returns a [`VerificationReport`]. Instances are spread over a
//! rayon pool; each worker builds its own solvers and the per-instance
//! results are merged back in canonical-code order, so a report depends only
//! on its bounds and seed. Graphs are always rebuilt from their canonical
//! code, which makes the reported dominated sets meaningful: decode the code
//! with [`CanonicalCode::to_graph`] and the vertex ids line up.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, forest_code, CanonicalCode};
use crate::enumerate::{forests, trees, MAX_FOREST_ORDER};
use crate::error::{Error, Result};
use crate::family::{base_gamma_t, base_shapes, base_tree, find_structure, in_fstar};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::solver::{gamma_t, Solver};

/// Name of the PRNG recorded in sampled reports.
pub const GENERATOR: &str = "ChaCha8Rng";
/// Largest order for which dominated sets are swept exhaustively by the gap
/// check; larger instances get sampled sets.
pub const EXHAUSTIVE_SUBSET_ORDER: usize = 10;
/// Largest tree order accepted by [`Harness::verify_theorem2`].
pub const MAX_THEOREM2_ORDER: usize = 14;
/// Largest tree order sampled by [`Harness::verify_continuation`].
pub const MAX_CONTINUATION_ORDER: usize = 16;
/// Largest order of the random connected graphs in the gap check.
pub const MAX_RANDOM_GRAPH_ORDER: usize = 16;

pub mod rules {
    pub const DTG_LE_STG: &str = "dtg <= stg";
    pub const EQUAL_NOT_MEMBER: &str = "gamma_t = dtg but not in F*";
    pub const MEMBER_NOT_EQUAL: &str = "in F* but gamma_t < dtg";
    pub const CONTINUATION_DTG: &str = "B subset A => dtg(A) <= dtg(B)";
    pub const CONTINUATION_STG: &str = "B subset A => stg(A) <= stg(B)";
    pub const GAP: &str = "|dtg - stg| <= 1";
    pub const GAP_GENERAL: &str = "|dtg - stg| <= 1 (general graph)";
    pub const UNDOMINATE_DTG: &str = "dtg increases after undominating x";
    pub const UNDOMINATE_STG: &str = "stg increases after undominating x";
    pub const LEAVES_AT_DISTANCE_3: &str = "(i) gamma_t = dtg => no two leaves at distance 3";
    pub const STRONG_SUPPORT_LEAF: &str = "(ii) gamma_t = dtg survives deleting a leaf at a strong support";
    pub const PENDANT_AT_SUPPORT: &str = "(iii) pendant edge at a support keeps dtg";
    pub const NO_21_STRUCTURE: &str = "(iv) gamma_t = dtg => no (2,1)-structure";
    pub const BASE_GAMMA_T: &str = "(v) base shape gamma_t = k1 + 2k2 + 3k3 + 5k4 + 1";
    pub const BASE_DTG: &str = "(v) base shape dtg = gamma_t";
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SubsetMode {
    Exhaustive,
    Sampled,
}

impl std::str::FromStr for SubsetMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<SubsetMode> {
        match s {
            "exhaustive" => Ok(SubsetMode::Exhaustive),
            "sampled" => Ok(SubsetMode::Sampled),
            _ => Err(Error::Malformed { line: 0, reason: format!("unknown subset mode `{s}`") }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub min_n: usize,
    pub max_n: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub subset_mode: Option<SubsetMode>,
}

/// One failed instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub rule: String,
    /// Canonical code of the tree or forest; absent for general graphs.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub code: Option<CanonicalCode>,
    /// Edge list, `u-v` pairs separated by `;`, for general graphs.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub edges: Option<String>,
    pub dominated: VertexSet,
    pub expected: String,
    pub observed: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub passed: bool,
    /// Graphs (or sampled graph/chain pairs) examined.
    pub instances: u64,
    /// Game states or configurations evaluated across all instances.
    pub states: u64,
    pub violation_counts: BTreeMap<String, usize>,
    pub violations: Vec<Violation>,
    /// Failures outside the claimed scope (general graphs); never fail a check.
    pub informational: Vec<Violation>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub generator: Option<String>,
    pub bounds: Bounds,
    pub wall_time_secs: f64,
}

impl VerificationReport {
    fn build(check: &str, bounds: Bounds, seed: Option<u64>, outcome: Outcome, started: Instant) -> Self {
        let mut violation_counts = BTreeMap::new();
        for v in &outcome.violations {
            *violation_counts.entry(v.rule.clone()).or_insert(0) += 1;
        }
        VerificationReport {
            check: check.to_string(),
            passed: outcome.violations.is_empty(),
            instances: outcome.instances,
            states: outcome.states,
            violation_counts,
            violations: outcome.violations,
            informational: outcome.informational,
            seed,
            generator: seed.map(|_| GENERATOR.to_string()),
            bounds,
            wall_time_secs: started.elapsed().as_secs_f64(),
        }
    }

    pub fn count(&self, rule: &str) -> usize {
        self.violation_counts.get(rule).copied().unwrap_or(0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Writes `<dir>/<check>.json` and returns the path.
    pub fn write_to(&self, dir: &Path) -> std::io::Result<PathBuf> {
        fs::create_dir_all(dir)?;
        let path = dir.join(format!("{}.json", self.check));
        fs::write(&path, self.to_json() + "\n")?;
        Ok(path)
    }
}

#[derive(Default)]
struct Outcome {
    instances: u64,
    states: u64,
    violations: Vec<Violation>,
    informational: Vec<Violation>,
}

impl Outcome {
    fn merge(mut self, other: Outcome) -> Outcome {
        self.instances += other.instances;
        self.states += other.states;
        self.violations.extend(other.violations);
        self.informational.extend(other.informational);
        self
    }

    fn fail(&mut self, rule: &str, code: &CanonicalCode, dominated: VertexSet, expected: String, observed: String) {
        self.violations.push(Violation { rule: rule.into(), code: Some(code.clone()), edges: None, dominated, expected, observed });
    }
}

/// A graph together with the code it was rebuilt from.
#[derive(Clone)]
struct Instance {
    code: CanonicalCode,
    graph: Graph,
}

impl Instance {
    fn from_code(code: CanonicalCode) -> Result<Instance> {
        let graph = code.to_graph()?;
        Ok(Instance { code, graph })
    }
}

fn tree_instances(min_n: usize, max_n: usize) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for n in min_n..=max_n {
        for (code, _) in trees(n)? {
            out.push(Instance::from_code(code)?);
        }
    }
    Ok(out)
}

fn forest_instances(max_n: usize) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        let mut codes = forests(n)?.iter().map(forest_code).collect::<Result<Vec<_>>>()?;
        codes.sort();
        for code in codes {
            out.push(Instance::from_code(code)?);
        }
    }
    Ok(out)
}

/// Independent stream per instance so results do not depend on scheduling.
fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn random_subset(rng: &mut ChaCha8Rng, within: VertexSet) -> VertexSet {
    VertexSet(rng.gen::<u64>() & within.0)
}

/// Random connected graph: a uniform labeled tree (Prüfer) plus extra edges.
fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    if n == 2 {
        g.add_edge(0, 1)?;
        return Ok(g);
    }
    let pruefer: Vec<Vertex> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &pruefer {
        degree[v] += 1;
    }
    for &v in &pruefer {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf remains");
        g.add_edge(leaf, v)?;
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<Vertex> = (0..n).filter(|&u| degree[u] == 1).collect();
    g.add_edge(rest[0], rest[1])?;
    let density: f64 = rng.gen_range(0.05..0.5);
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.gen_bool(density) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

fn fmt_set(s: VertexSet) -> String {
    let ids: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", ids.join(","))
}

fn check_range(what: &str, n: usize, lo: usize, hi: usize) -> Result<()> {
    if (lo..=hi).contains(&n) {
        Ok(())
    } else {
        Err(Error::OutOfBounds(format!("{what} {n} outside {lo}..={hi}")))
    }
}

/// Recognizer used by the Theorem 2 check.
pub type Recognizer<'a> = &'a (dyn Fn(&Graph) -> Result<bool> + Sync);

/// A deliberately broken `F*` recognizer: flips the answer on roughly one
/// tree in `period`, chosen by hashing the canonical code with `seed`.
pub fn corrupted_recognizer(seed: u64, period: u64) -> impl Fn(&Graph) -> Result<bool> + Sync {
    move |tree: &Graph| {
        let code = canonical_form(tree)?;
        // FNV-1a, stable across platforms and releases
        let mut h: u64 = 0xcbf2_9ce4_8422_2325 ^ seed;
        for &b in code.as_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
        Ok(in_fstar(tree)? ^ h.is_multiple_of(period.max(1)))
    }
}

/// Worker pool plus the checks.
pub struct Harness {
    pool: rayon::ThreadPool,
}

impl Harness {
    /// `jobs = 0` uses the available parallelism.
    pub fn new(jobs: usize) -> Result<Harness> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::OutOfBounds(format!("cannot start worker pool: {e}")))?;
        Ok(Harness { pool })
    }

    pub fn jobs(&self) -> usize {
        self.pool.current_num_threads()
    }

    fn run<T, F>(&self, items: &[T], f: F) -> Result<Outcome>
    where
        T: Sync,
        F: Fn(usize, &T) -> Result<Outcome> + Sync,
    {
        let parts: Vec<Result<Outcome>> =
            self.pool.install(|| items.par_iter().enumerate().map(|(i, item)| f(i, item)).collect());
        parts.into_iter().try_fold(Outcome::default(), |acc, part| Ok(acc.merge(part?)))
    }

    /// `dtg(F|S) <= stg(F|S)` for every isolate-free forest with at most
    /// `max_n` vertices and every (or `samples` random) dominated set.
    pub fn verify_theorem1(&self, max_n: usize, mode: SubsetMode, samples: usize, seed: u64) -> Result<VerificationReport> {
        let started = Instant::now();
        check_range("forest order", max_n, 2, MAX_FOREST_ORDER)?;
        let instances = forest_instances(max_n)?;
        let outcome = self.run(&instances, |i, inst| {
            let mut out = Outcome { instances: 1, ..Outcome::default() };
            let mut solver = Solver::new(&inst.graph)?;
            let full = inst.graph.vertices();
            let mut check = |s: VertexSet, out: &mut Outcome| {
                let (d, st) = (solver.dtg(s), solver.stg(s));
                out.states += 1;
                if d > st {
                    out.fail(rules::DTG_LE_STG, &inst.code, s, "dtg <= stg".into(), format!("dtg={d} stg={st}"));
                }
            };
            match mode {
                SubsetMode::Exhaustive => {
                    for mask in 0..=full.0 {
                        check(VertexSet(mask), &mut out);
                    }
                }
                SubsetMode::Sampled => {
                    let mut rng = rng_for(seed, i as u64);
                    for _ in 0..samples {
                        check(random_subset(&mut rng, full), &mut out);
                    }
                }
            }
            Ok(out)
        })?;
        let sampled = mode == SubsetMode::Sampled;
        let bounds = Bounds { min_n: 2, max_n, samples: sampled.then_some(samples), subset_mode: Some(mode) };
        Ok(VerificationReport::build("theorem1", bounds, sampled.then_some(seed), outcome, started))
    }

    /// `gamma_t(T) = dtg(T)` iff `T` is in `F*`, for every tree of order
    /// `2..=max_n`. Failures are split by direction.
    pub fn verify_theorem2(&self, max_n: usize) -> Result<VerificationReport> {
        self.verify_theorem2_with(max_n, &|t: &Graph| in_fstar(t))
    }

    pub fn verify_theorem2_with(&self, max_n: usize, recognizer: Recognizer<'_>) -> Result<VerificationReport> {
        let started = Instant::now();
        check_range("tree order", max_n, 2, MAX_THEOREM2_ORDER)?;
        let instances = tree_instances(2, max_n)?;
        let outcome = self.run(&instances, |_, inst| {
            let mut out = Outcome { instances: 1, states: 1, ..Outcome::default() };
            let g = gamma_t(&inst.graph)?;
            let d = Solver::new(&inst.graph)?.dtg(VertexSet::EMPTY);
            let member = recognizer(&inst.graph)?;
            let observed = format!("gamma_t={g} dtg={d} in_fstar={member}");
            if g == d && !member {
                out.fail(rules::EQUAL_NOT_MEMBER, &inst.code, VertexSet::EMPTY, "in_fstar=true".into(), observed);
            } else if g != d && member {
                out.fail(rules::MEMBER_NOT_EQUAL, &inst.code, VertexSet::EMPTY, format!("dtg={g}"), observed);
            }
            Ok(out)
        })?;
        let bounds = Bounds { min_n: 2, max_n, samples: None, subset_mode: None };
        Ok(VerificationReport::build("theorem2", bounds, None, outcome, started))
    }

    /// Sampled chains `B ⊆ A` on random trees of order `2..=max_n`:
    /// more dominated never means a longer game.
    pub fn verify_continuation(&self, max_n: usize, samples: usize, seed: u64) -> Result<VerificationReport> {
        let started = Instant::now();
        check_range("tree order", max_n, 2, MAX_CONTINUATION_ORDER)?;
        let catalog: Vec<Vec<CanonicalCode>> =
            (2..=max_n).map(|n| Ok(trees(n)?.map(|(c, _)| c).collect())).collect::<Result<_>>()?;
        // draw every sample up front so the choice of instance is sequential
        let mut draws = Vec::with_capacity(samples);
        for i in 0..samples {
            let mut rng = rng_for(seed, i as u64);
            let order = rng.gen_range(0..catalog.len());
            let code = catalog[order][rng.gen_range(0..catalog[order].len())].clone();
            let inst = Instance::from_code(code)?;
            let a = random_subset(&mut rng, inst.graph.vertices());
            let b = random_subset(&mut rng, a);
            draws.push((inst, a, b));
        }
        let outcome = self.run(&draws, |_, (inst, a, b)| {
            let mut out = Outcome { instances: 1, states: 2, ..Outcome::default() };
            let mut solver = Solver::new(&inst.graph)?;
            let (da, db) = (solver.dtg(*a), solver.dtg(*b));
            let (sa, sb) = (solver.stg(*a), solver.stg(*b));
            if da > db {
                let expected = format!("dtg(A) <= dtg(B={})", fmt_set(*b));
                out.fail(rules::CONTINUATION_DTG, &inst.code, *a, expected, format!("dtg(A)={da} dtg(B)={db}"));
            }
            if sa > sb {
                let expected = format!("stg(A) <= stg(B={})", fmt_set(*b));
                out.fail(rules::CONTINUATION_STG, &inst.code, *a, expected, format!("stg(A)={sa} stg(B)={sb}"));
            }
            Ok(out)
        })?;
        let bounds = Bounds { min_n: 2, max_n, samples: Some(samples), subset_mode: Some(SubsetMode::Sampled) };
        Ok(VerificationReport::build("continuation", bounds, Some(seed), outcome, started))
    }

    /// `|dtg − stg| <= 1` on every isolate-free forest of order `<= max_n`
    /// (all dominated sets up to order 10, `samples` random ones beyond),
    /// plus `samples` random connected graphs whose failures are only
    /// informational.
    pub fn verify_gap_le_one(&self, max_n: usize, samples: usize, seed: u64) -> Result<VerificationReport> {
        let started = Instant::now();
        check_range("forest order", max_n, 2, MAX_FOREST_ORDER)?;
        let sweep = |solver: &mut Solver<'_>, code: Option<&CanonicalCode>, stream: u64| {
            let general = code.is_none();
            let mut out = Outcome { instances: 1, ..Outcome::default() };
            let full = solver.graph().vertices();
            let sets: Vec<VertexSet> = if full.len() <= EXHAUSTIVE_SUBSET_ORDER {
                (0..=full.0).map(VertexSet).collect()
            } else {
                let mut rng = rng_for(seed, stream);
                (0..samples).map(|_| random_subset(&mut rng, full)).collect()
            };
            for s in sets {
                let (d, st) = (solver.dtg(s), solver.stg(s));
                out.states += 1;
                if d.abs_diff(st) > 1 {
                    let v = Violation {
                        rule: if general { rules::GAP_GENERAL } else { rules::GAP }.into(),
                        code: code.cloned(),
                        edges: general.then(|| edge_string(solver.graph())),
                        dominated: s,
                        expected: "|dtg - stg| <= 1".into(),
                        observed: format!("dtg={d} stg={st}"),
                    };
                    if general {
                        out.informational.push(v);
                    } else {
                        out.violations.push(v);
                    }
                }
            }
            out
        };

        let instances = forest_instances(max_n)?;
        let forests_out = self.run(&instances, |i, inst| Ok(sweep(&mut Solver::new(&inst.graph)?, Some(&inst.code), i as u64)))?;

        let offset = instances.len() as u64;
        let max_graph = max_n.clamp(3, MAX_RANDOM_GRAPH_ORDER);
        let mut graphs = Vec::with_capacity(samples);
        for i in 0..samples {
            let mut rng = rng_for(seed ^ 0x9e37_79b9_7f4a_7c15, i as u64);
            let n = rng.gen_range(3..=max_graph);
            graphs.push(random_connected_graph(&mut rng, n)?);
        }
        let graphs_out = self.run(&graphs, |i, g| {
            Ok(sweep(&mut Solver::new(g)?, None, offset + i as u64))
        })?;

        let bounds = Bounds { min_n: 2, max_n, samples: Some(samples), subset_mode: Some(SubsetMode::Exhaustive) };
        Ok(VerificationReport::build("gap", bounds, Some(seed), forests_out.merge(graphs_out), started))
    }

    /// For every isolate-free forest of order `<= max_n`, every dominated set
    /// `S` and every `x ∈ S` with a neighbor `y` such that all vertices at
    /// distance 1 and 2 from `x`, except possibly `y`, are in `S`: undominating
    /// `x` strictly increases both `dtg` and `stg`.
    pub fn verify_lemma_main1(&self, max_n: usize) -> Result<VerificationReport> {
        let started = Instant::now();
        check_range("forest order", max_n, 2, 12)?;
        let instances = forest_instances(max_n)?;
        let outcome = self.run(&instances, |_, inst| {
            let g = &inst.graph;
            let mut out = Outcome { instances: 1, ..Outcome::default() };
            let mut solver = Solver::new(g)?;
            let rings: Vec<VertexSet> = (0..g.order())
                .map(|x| {
                    let near = g.neighbors(x);
                    near.iter().fold(near, |acc, u| acc.union(g.neighbors(u))).without(x)
                })
                .collect();
            for mask in 0..=g.vertices().0 {
                let s = VertexSet(mask);
                for x in s {
                    let missing = rings[x].difference(s);
                    let qualifies = missing.is_empty() || (missing.len() == 1 && missing.is_subset(g.neighbors(x)));
                    if !qualifies {
                        continue;
                    }
                    out.states += 1;
                    let sx = s.without(x);
                    let (d0, d1) = (solver.dtg(s), solver.dtg(sx));
                    let (s0, s1) = (solver.stg(s), solver.stg(sx));
                    if d1 <= d0 {
                        out.fail(rules::UNDOMINATE_DTG, &inst.code, s, format!("dtg after undominating {x} > {d0}"), format!("dtg={d1}"));
                    }
                    if s1 <= s0 {
                        out.fail(rules::UNDOMINATE_STG, &inst.code, s, format!("stg after undominating {x} > {s0}"), format!("stg={s1}"));
                    }
                }
            }
            Ok(out)
        })?;
        let bounds = Bounds { min_n: 2, max_n, samples: None, subset_mode: Some(SubsetMode::Exhaustive) };
        Ok(VerificationReport::build("lemma31", bounds, None, outcome, started))
    }

    /// The tree lemmas (i)–(v) over every tree of order `2..=max_n`; (v) covers
    /// the base shapes of order `<= max_n`.
    pub fn verify_structural_lemmas(&self, max_n: usize) -> Result<VerificationReport> {
        let started = Instant::now();
        check_range("tree order", max_n, 2, MAX_THEOREM2_ORDER)?;
        let instances = tree_instances(2, max_n)?;
        let mut outcome = self.run(&instances, |_, inst| structural_checks(inst))?;
        outcome = outcome.merge(self.base_shape_outcome(max_n)?);
        let bounds = Bounds { min_n: 2, max_n, samples: None, subset_mode: None };
        Ok(VerificationReport::build("structural", bounds, None, outcome, started))
    }

    /// Check (v) alone: every base shape with `k1 >= 1` and at most
    /// `max_order` vertices has `gamma_t = k1 + 2k2 + 3k3 + 5k4 + 1 = dtg`.
    pub fn verify_base_formula(&self, max_order: usize) -> Result<VerificationReport> {
        let started = Instant::now();
        check_range("base shape order", max_order, 3, 40)?;
        let outcome = self.base_shape_outcome(max_order)?;
        let bounds = Bounds { min_n: 3, max_n: max_order, samples: None, subset_mode: None };
        Ok(VerificationReport::build("base_formula", bounds, None, outcome, started))
    }

    fn base_shape_outcome(&self, max_order: usize) -> Result<Outcome> {
        let shapes = base_shapes(max_order);
        self.run(&shapes, |_, &[k1, k2, k3, k4]| {
            let mut out = Outcome { instances: 1, states: 1, ..Outcome::default() };
            let code = canonical_form(&base_tree(k1, k2, k3, k4)?)?;
            let tree = code.to_graph()?;
            let formula = base_gamma_t(k1, k2, k3, k4);
            let g = gamma_t(&tree)?;
            let d = Solver::new(&tree)?.dtg(VertexSet::EMPTY);
            let shape = format!("k=({k1},{k2},{k3},{k4})");
            if g != formula {
                out.fail(rules::BASE_GAMMA_T, &code, VertexSet::EMPTY, format!("{shape} gamma_t={formula}"), format!("gamma_t={g}"));
            }
            if d != g {
                out.fail(rules::BASE_DTG, &code, VertexSet::EMPTY, format!("{shape} dtg={g}"), format!("dtg={d}"));
            }
            Ok(out)
        })
    }
}

fn edge_string(g: &Graph) -> String {
    g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(";")
}

fn structural_checks(inst: &Instance) -> Result<Outcome> {
    let t = &inst.graph;
    let code = &inst.code;
    let mut out = Outcome { instances: 1, ..Outcome::default() };
    let g = gamma_t(t)?;
    let d = Solver::new(t)?.dtg(VertexSet::EMPTY);
    let equal = g == d;
    let leaves = t.leaves();
    let none = VertexSet::EMPTY;

    // (i)
    out.states += 1;
    if equal {
        for u in leaves {
            let dist = t.distances_from(u);
            if let Some(v) = leaves.iter().find(|&v| v > u && dist[v] == 3) {
                out.fail(rules::LEAVES_AT_DISTANCE_3, code, none, "no leaves at distance 3".into(), format!("leaves {u} and {v}"));
                break;
            }
        }
    }

    // (ii)
    if equal {
        for v in t.support_vertices() {
            let own = t.neighbors(v).intersection(leaves);
            if own.len() < 2 {
                continue;
            }
            out.states += 1;
            let leaf = own.first().expect("two leaves");
            let (smaller, _) = t.induced(t.vertices().without(leaf));
            let (g2, d2) = (gamma_t(&smaller)?, Solver::new(&smaller)?.dtg(none));
            if g2 != d2 {
                out.fail(rules::STRONG_SUPPORT_LEAF, code, none, format!("deleting leaf {leaf}: gamma_t = dtg"), format!("gamma_t={g2} dtg={d2}"));
            }
        }
    }

    // (iii)
    for s in t.support_vertices() {
        out.states += 1;
        let bigger = t.with_pendant(s)?;
        let d2 = Solver::new(&bigger)?.dtg(none);
        if d2 != d {
            out.fail(rules::PENDANT_AT_SUPPORT, code, none, format!("pendant at {s}: dtg={d}"), format!("dtg={d2}"));
        }
    }

    // (iv)
    out.states += 1;
    if equal {
        for pivot in 0..t.order() {
            if let Some(w) = find_structure(t, &[2, 1], pivot)? {
                out.fail(rules::NO_21_STRUCTURE, code, none, "no (2,1)-structure".into(), format!("pivot {}", w.pivot));
                break;
            }
        }
    }
    Ok(out)
}
