//! Named check suites that compare independent routes to the same objects:
//! grammar iteration, symmetric-basis reduction, coefficient recurrences,
//! exhaustive enumeration and generating-function identities.
//!
//! Each check records its inputs, and on failure the expected and actual
//! values. Randomized checks draw from a ChaCha RNG seeded by the caller.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::egf::{self, EgfSeries};
use crate::expr::{parse, print};
use crate::grammar::{self, Grammar, Preset};
use crate::oracle;
use crate::poly::{Monomial, Polynomial, Var};
use crate::symexp;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Leibniz,
    EulerianOracle,
    StirlingOracle,
    GammaTrees,
    ETrees,
    NoDoubleDescent,
    EgfClosedForms,
    TreeRatio,
    Recurrence,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Leibniz,
        Suite::EulerianOracle,
        Suite::StirlingOracle,
        Suite::GammaTrees,
        Suite::ETrees,
        Suite::NoDoubleDescent,
        Suite::EgfClosedForms,
        Suite::TreeRatio,
        Suite::Recurrence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Leibniz => "leibniz",
            Suite::EulerianOracle => "eulerian-oracle",
            Suite::StirlingOracle => "stirling-oracle",
            Suite::GammaTrees => "gamma-trees",
            Suite::ETrees => "e-trees",
            Suite::NoDoubleDescent => "no-double-descent",
            Suite::EgfClosedForms => "egf-closed-forms",
            Suite::TreeRatio => "tree-ratio",
            Suite::Recurrence => "recurrence",
        }
    }

    /// Largest `max_n` the suite accepts without an explicit override, for
    /// suites that enumerate.
    pub fn enumeration_limit(self) -> Option<u32> {
        match self {
            Suite::EulerianOracle | Suite::NoDoubleDescent => {
                Some(oracle::MAX_PERMUTATION_N as u32)
            }
            Suite::StirlingOracle => Some(oracle::MAX_STIRLING_N as u32),
            Suite::GammaTrees | Suite::ETrees | Suite::TreeRatio => Some(oracle::MAX_TREE_N as u32),
            Suite::Leibniz | Suite::EgfClosedForms | Suite::Recurrence => None,
        }
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Suite, String> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: String,
    pub name: String,
    pub input: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub actual: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "passed": self.passed(),
            "total": self.checks.len(),
            "failed": self.failures().count(),
            "checks": self.checks,
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "{status}  {:<18} {:<32} {}\n",
                c.suite, c.name, c.input
            ));
            if !c.passed {
                if let Some(e) = &c.expected {
                    out.push_str(&format!("      expected: {e}\n"));
                }
                if let Some(a) = &c.actual {
                    out.push_str(&format!("      actual:   {a}\n"));
                }
            }
        }
        let failed = self.failures().count();
        out.push_str(&format!(
            "{} checks, {} passed, {} failed\n",
            self.checks.len(),
            self.checks.len() - failed,
            failed
        ));
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_n: u32,
    pub seed: u64,
    /// Random `(f, g)` pairs per preset grammar for the calculus checks.
    pub random_pairs: usize,
    /// Truncation order for series multiplicativity.
    pub series_order: usize,
}

impl Default for VerifyConfig {
    fn default() -> VerifyConfig {
        VerifyConfig {
            max_n: 6,
            seed: 0,
            random_pairs: 100,
            series_order: 5,
        }
    }
}

struct Recorder {
    suite: Suite,
    checks: Vec<Check>,
}

impl Recorder {
    fn new(suite: Suite) -> Recorder {
        Recorder {
            suite,
            checks: Vec::new(),
        }
    }

    fn record(&mut self, name: &str, input: String, outcome: Result<(), (String, String)>) {
        let (passed, expected, actual) = match outcome {
            Ok(()) => (true, None, None),
            Err((e, a)) => (false, Some(e), Some(a)),
        };
        self.checks.push(Check {
            suite: self.suite.name().to_string(),
            name: name.to_string(),
            input,
            passed,
            expected,
            actual,
        });
    }

    fn eq<T: PartialEq + fmt::Debug>(&mut self, name: &str, input: String, expected: T, actual: T) {
        let outcome = if expected == actual {
            Ok(())
        } else {
            Err((format!("{expected:?}"), format!("{actual:?}")))
        };
        self.record(name, input, outcome);
    }

    fn poly(&mut self, name: &str, input: String, expected: &Polynomial, actual: &Polynomial) {
        let outcome = if expected == actual {
            Ok(())
        } else {
            Err((print(expected), print(actual)))
        };
        self.record(name, input, outcome);
    }

    fn truth(&mut self, name: &str, input: String, ok: bool) {
        let outcome = if ok {
            Ok(())
        } else {
            Err(("true".into(), "false".into()))
        };
        self.record(name, input, outcome);
    }

    fn error(&mut self, name: &str, input: String, err: impl fmt::Display) {
        self.record(name, input, Err(("no error".into(), err.to_string())));
    }
}

fn n_input(n: u32) -> String {
    format!("n={n}")
}

fn to_big<K: Ord + Clone>(hist: &BTreeMap<K, u64>) -> BTreeMap<K, BigInt> {
    hist.iter()
        .map(|(k, &c)| (k.clone(), BigInt::from(c)))
        .collect()
}

fn double_factorial_odd(n: u32) -> BigInt {
    (1..=n).map(|j| BigInt::from(2 * j - 1)).product()
}

fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

fn vars(names: &[&str]) -> Vec<Var> {
    names.iter().map(|&s| Var::new(s)).collect()
}

/// Every ordering of three variables, as renamings.
fn permutations_of(vs: &[Var; 3]) -> Vec<HashMap<Var, Var>> {
    let orders = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    orders
        .iter()
        .map(|o| (0..3).map(|i| (vs[i], vs[o[i]])).collect())
        .collect()
}

/// A random Laurent polynomial with at most `max_terms` terms over `vars`,
/// exponents in `-1..=2` and coefficients in `-4..=4`.
pub fn random_polynomial(rng: &mut impl Rng, vars: &[Var], max_terms: usize) -> Polynomial {
    let terms = rng.random_range(1..=max_terms);
    Polynomial::from_terms((0..terms).map(|_| {
        let m = Monomial::from_pairs(vars.iter().map(|&v| (v, rng.random_range(-1..=2i64))));
        (m, BigInt::from(rng.random_range(-4..=4i64)))
    }))
}

fn grammar_vars(g: &Grammar) -> Vec<Var> {
    let mut vs: Vec<Var> = g.order().to_vec();
    // an unruled variable behaves as a constant
    vs.push(Var::new("c"));
    vs
}

fn leibniz(config: &VerifyConfig) -> Vec<Check> {
    let mut rec = Recorder::new(Suite::Leibniz);
    for (idx, preset) in Preset::ALL.into_iter().enumerate() {
        let g = preset.grammar();
        let vs = grammar_vars(&g);
        let mut rng =
            ChaCha8Rng::seed_from_u64(config.seed.wrapping_mul(31).wrapping_add(idx as u64));
        let input = format!(
            "grammar={preset} pairs={} seed={}",
            config.random_pairs, config.seed
        );

        let mut failure = None;
        let mut series_failure = None;
        for _ in 0..config.random_pairs {
            let f = random_polynomial(&mut rng, &vs, 3);
            let h = random_polynomial(&mut rng, &vs, 3);
            let fh = &f * &h;
            if failure.is_none() {
                let lhs = g.derive(&fh);
                let rhs = &(&g.derive(&f) * &h) + &(&f * &g.derive(&h));
                if lhs != rhs {
                    failure = Some((format!("f={f} g={h}"), rhs, lhs));
                }
            }
            if series_failure.is_none() {
                let order = config.series_order;
                let lhs = egf::gen(&g, &fh, order);
                let rhs = egf::gen(&g, &f, order)
                    .mul(&egf::gen(&g, &h, order))
                    .expect("same order");
                if lhs != rhs {
                    series_failure =
                        Some((format!("f={f} g={h}"), rhs.to_string(), lhs.to_string()));
                }
            }
        }
        match failure {
            None => rec.record("derivation-rule", input.clone(), Ok(())),
            Some((pair, e, a)) => rec.record(
                "derivation-rule",
                format!("{input} {pair}"),
                Err((print(&e), print(&a))),
            ),
        }
        let series_input = format!("{input} order={}", config.series_order);
        match series_failure {
            None => rec.record("series-multiplicativity", series_input, Ok(())),
            Some((pair, e, a)) => rec.record(
                "series-multiplicativity",
                format!("{series_input} {pair}"),
                Err((e, a)),
            ),
        }

        let constants_ok = (0..10).all(|_| {
            let c = random_polynomial(&mut rng, &[Var::new("c")], 3);
            g.derive(&c).is_zero()
        });
        rec.truth(
            "constant-annihilation",
            format!("grammar={preset}"),
            constants_ok,
        );
    }
    let de = Preset::DumontEulerian.grammar();
    rec.poly(
        "x-minus-y-is-constant",
        "grammar=dumont-eulerian".into(),
        &Polynomial::zero(),
        &de.derive(&parse("x - y").unwrap()),
    );
    rec.checks
}

const LISTED_EULERIAN: [&str; 6] = [
    "x*y",
    "x^2*y + x*y^2",
    "x^3*y + 4*x^2*y^2 + x*y^3",
    "x^4*y + 11*x^3*y^2 + 11*x^2*y^3 + x*y^4",
    "x^5*y + 26*x^4*y^2 + 66*x^3*y^3 + 26*x^2*y^4 + x*y^5",
    "x^6*y + 57*x^5*y^2 + 302*x^4*y^3 + 302*x^3*y^4 + 57*x^2*y^5 + x*y^6",
];

/// Canonical text of the Eulerian polynomials `A_1..A_6` as tabulated in the
/// literature.
pub fn listed_eulerian(n: usize) -> Option<&'static str> {
    LISTED_EULERIAN.get(n.checked_sub(1)?).copied()
}

fn eulerian_oracle(config: &VerifyConfig) -> Vec<Check> {
    let mut rec = Recorder::new(Suite::EulerianOracle);
    let xy = vars(&["x", "y"]);
    for n in 1..=config.max_n {
        let a = grammar::eulerian(n).expect("n >= 1");
        let brute = oracle::permutation_distribution(n as usize);
        rec.poly("grammar-equals-permutations", n_input(n), &brute, &a);
        rec.eq(
            "homogeneous-degree",
            n_input(n),
            Some(n as i64 + 1),
            a.homogeneous_degree(),
        );
        rec.truth("symmetric", n_input(n), a.is_symmetric(&xy));
        rec.eq("total-count", n_input(n), factorial(n), a.eval_ones());
        if let Some(listed) = listed_eulerian(n as usize) {
            rec.eq(
                "listed-table-text",
                n_input(n),
                listed.to_string(),
                print(&a),
            );
        }
        rec.poly(
            "parse-print-round-trip",
            n_input(n),
            &a,
            &parse(&print(&a)).unwrap(),
        );
    }
    rec.checks
}

fn stirling_oracle(config: &VerifyConfig) -> Vec<Check> {
    let mut rec = Recorder::new(Suite::StirlingOracle);
    let [x, y, z] = [Var::new("x"), Var::new("y"), Var::new("z")];
    for n in 1..=config.max_n {
        let c = grammar::second_order(n).expect("n >= 1");
        let brute = oracle::stirling_distribution(n as usize);
        rec.poly("grammar-equals-stirling", n_input(n), &brute, &c);
        let all_perms = permutations_of(&[x, y, z])
            .iter()
            .all(|p| brute.rename(p) == brute);
        rec.truth("invariant-under-six-permutations", n_input(n), all_perms);
        rec.eq(
            "homogeneous-degree",
            n_input(n),
            Some(2 * n as i64 + 1),
            c.homogeneous_degree(),
        );
        rec.eq(
            "total-count",
            n_input(n),
            double_factorial_odd(n),
            c.eval_ones(),
        );

        let mut marginal: BTreeMap<u32, BigInt> = BTreeMap::new();
        for (m, coeff) in c.terms() {
            *marginal.entry(m.exponent(x) as u32).or_default() += coeff;
        }
        rec.eq(
            "descent-marginal",
            n_input(n),
            to_big(&oracle::second_order_numbers(n as usize)),
            marginal,
        );
        rec.poly(
            "parse-print-round-trip",
            n_input(n),
            &c,
            &parse(&print(&c)).unwrap(),
        );
    }
    rec.checks
}

fn gamma_trees(config: &VerifyConfig) -> Vec<Check> {
    let mut rec = Recorder::new(Suite::GammaTrees);
    for n in 1..=config.max_n {
        let a = grammar::eulerian(n).expect("n >= 1");
        let g = match symexp::gamma_expand(&a) {
            Ok(g) => g,
            Err(e) => {
                rec.error("gamma-expand", n_input(n), e);
                continue;
            }
        };
        let leaves = to_big(&oracle::tree_leaf_histogram(n as usize, 2, true));
        rec.eq(
            "expansion-equals-leaf-histogram",
            n_input(n),
            leaves,
            g.coefficients.clone(),
        );
        rec.truth("gamma-positive", n_input(n), g.positive);
        rec.poly("reconstruction", n_input(n), &a, &g.reconstruct());
        match symexp::gamma_table_via_grammar(n) {
            Ok(h) => rec.eq(
                "expansion-equals-transformed-grammar",
                n_input(n),
                g.clone(),
                h,
            ),
            Err(e) => rec.error("expansion-equals-transformed-grammar", n_input(n), e),
        }
        let in_range = g.coefficients.keys().all(|&k| 1 <= k && k <= n.div_ceil(2));
        rec.truth("support-range", n_input(n), in_range);
        let weighted: BigInt = g
            .coefficients
            .iter()
            .map(|(&k, c)| c * (BigInt::from(1) << (n + 1 - 2 * k)))
            .sum();
        rec.eq(
            "weighted-sum-is-factorial",
            n_input(n),
            factorial(n),
            weighted,
        );

        let mut f2_ok = true;
        let mut class_sum = Polynomial::zero();
        let mut class_err = None;
        oracle::for_each_tree(n as usize, 2, true, |t| {
            f2_ok &= t.count_degree(2) + 1 == t.leaves();
            match oracle::class_weight_sum(t) {
                Ok(w) => class_sum += w,
                Err(e) => class_err = Some(e),
            }
        });
        rec.truth("two-child-count-is-leaves-minus-one", n_input(n), f2_ok);
        match class_err {
            None => rec.poly(
                "class-weights-partition-permutations",
                n_input(n),
                &a,
                &class_sum,
            ),
            Some(e) => rec.error("class-weights-partition-permutations", n_input(n), e),
        }
        let uv = g.as_uv_polynomial();
        rec.poly(
            "parse-print-round-trip",
            n_input(n),
            &uv,
            &parse(&print(&uv)).unwrap(),
        );
    }
    rec.checks
}

fn e_trees(config: &VerifyConfig) -> Vec<Check> {
    let mut rec = Recorder::new(Suite::ETrees);
    for n in 1..=config.max_n {
        let c = grammar::second_order(n).expect("n >= 1");
        let e = match symexp::e_expand(&c) {
            Ok(e) => e,
            Err(err) => {
                rec.error("e-expand", n_input(n), err);
                continue;
            }
        };
        let profile = to_big(&oracle::tree_profile_histogram(n as usize));
        rec.eq(
            "expansion-equals-profile-histogram",
            n_input(n),
            profile,
            e.coefficients.clone(),
        );
        rec.truth("e-positive", n_input(n), e.positive);
        rec.truth("weights-are-2n-plus-1", n_input(n), e.weights_consistent());
        match e.reconstruct() {
            Ok(r) => rec.poly("reconstruction", n_input(n), &c, &r),
            Err(err) => rec.error("reconstruction", n_input(n), err),
        }
        match symexp::e_table_via_grammar(n) {
            Ok(h) => rec.eq(
                "expansion-equals-transformed-grammar",
                n_input(n),
                e.clone(),
                h,
            ),
            Err(err) => rec.error("expansion-equals-transformed-grammar", n_input(n), err),
        }
        let mut edges_ok = true;
        oracle::for_each_tree(n as usize, 3, true, |t| {
            let (i, j, k) = t.profile();
            edges_ok &= i + 2 * j + 3 * k == 2 * n + 1;
        });
        rec.truth("tree-profiles-have-weight-2n-plus-1", n_input(n), edges_ok);
        let uvw = e.as_uvw_polynomial();
        rec.poly(
            "parse-print-round-trip",
            n_input(n),
            &uvw,
            &parse(&print(&uvw)).unwrap(),
        );
    }
    rec.checks
}

fn no_double_descent(config: &VerifyConfig) -> Vec<Check> {
    let mut rec = Recorder::new(Suite::NoDoubleDescent);
    for n in 1..=config.max_n {
        let a = grammar::eulerian(n).expect("n >= 1");
        match symexp::gamma_expand(&a) {
            Ok(g) => rec.eq(
                "counts-equal-gamma",
                n_input(n),
                to_big(&oracle::no_double_descent_counts(n as usize)),
                g.coefficients,
            ),
            Err(e) => rec.error("counts-equal-gamma", n_input(n), e),
        }
    }
    rec.checks
}

fn egf_closed_forms(config: &VerifyConfig) -> Vec<Check> {
    let mut rec = Recorder::new(Suite::EgfClosedForms);
    let order = config.max_n as usize;
    let input = format!("order={order}");
    rec.truth(
        "eulerian-generating-function",
        input.clone(),
        egf::check_eulerian_egf(order),
    );
    rec.truth(
        "carlitz-scoville",
        input.clone(),
        egf::check_carlitz_scoville(order),
    );
    rec.truth(
        "classical-specialization",
        input.clone(),
        egf::check_classical_specialization(order),
    );

    let de = Preset::DumontEulerian.grammar();
    let y = parse("y").unwrap();
    let product = egf::gen(&de, &y, order)
        .mul(&egf::gen(&de, &parse("y^-1").unwrap(), order))
        .expect("same order");
    rec.eq(
        "reciprocal-series",
        input.clone(),
        EgfSeries::unit(order),
        product,
    );

    let series = egf::gen(&de, &y, order);
    rec.poly("constant-term-is-y", input, &y, series.coeff(0));
    for n in 1..=config.max_n {
        let a = grammar::eulerian(n).expect("n >= 1");
        rec.poly(
            "coefficients-are-eulerian",
            n_input(n),
            &a,
            series.coeff(n as usize),
        );
        let closed = parse(&format!("x*y^-1*(y-x)^{n}")).unwrap();
        rec.poly(
            "iterated-x-over-y",
            n_input(n),
            &closed,
            &de.iterate(&parse("x*y^-1").unwrap(), n),
        );
    }
    rec.checks
}

fn tree_ratio(config: &VerifyConfig) -> Vec<Check> {
    let mut rec = Recorder::new(Suite::TreeRatio);
    for n in 1..=config.max_n {
        let plane = oracle::tree_leaf_histogram(n as usize, 2, true);
        let free = oracle::tree_leaf_histogram(n as usize, 2, false);
        let scaled: BTreeMap<u32, BigInt> = free
            .iter()
            .map(|(&k, &s)| (k, BigInt::from(s) << (k - 1)))
            .collect();
        rec.eq(
            "plane-is-2^(k-1)-times-nonplane",
            n_input(n),
            scaled,
            to_big(&plane),
        );
        rec.poly(
            "andre-grammar-equals-trees",
            n_input(n),
            &oracle::andre_distribution(n as usize),
            &grammar::andre(n).expect("n >= 1"),
        );
    }
    rec.checks
}

fn recurrence(config: &VerifyConfig) -> Vec<Check> {
    let mut rec = Recorder::new(Suite::Recurrence);
    let gamma_bindings = HashMap::from([
        (Var::new("u"), parse("x*y").unwrap()),
        (Var::new("v"), parse("x+y").unwrap()),
    ]);
    let e_bindings = HashMap::from([
        (Var::new("u"), parse("x+y+z").unwrap()),
        (Var::new("v"), parse("x*y+x*z+y*z").unwrap()),
        (Var::new("w"), parse("x*y*z").unwrap()),
    ]);
    let gamma_grammar = Preset::GammaEulerian.grammar();
    let e_grammar = Preset::ETrivariate.grammar();
    for n in 1..=config.max_n {
        match (
            symexp::e_table_via_recurrence(n),
            symexp::e_table_via_grammar(n),
        ) {
            (Ok(r), Ok(g)) => rec.eq("recurrence-equals-grammar", n_input(n), g, r),
            (Err(e), _) | (_, Err(e)) => rec.error("recurrence-equals-grammar", n_input(n), e),
        }

        let a = grammar::eulerian(n).expect("n >= 1");
        let c = grammar::second_order(n).expect("n >= 1");
        let a_next = grammar::eulerian(n + 1).expect("n >= 1");
        let c_next = grammar::second_order(n + 1).expect("n >= 1");
        let a_step =
            &parse("x*y").unwrap() * &(&a.partial_derivative("x") + &a.partial_derivative("y"));
        rec.poly(
            "eulerian-differential-recurrence",
            n_input(n),
            &a_next,
            &a_step,
        );
        let c_step = &parse("x*y*z").unwrap()
            * &(&(&c.partial_derivative("x") + &c.partial_derivative("y"))
                + &c.partial_derivative("z"));
        rec.poly(
            "second-order-differential-recurrence",
            n_input(n),
            &c_next,
            &c_step,
        );

        let via_gamma = gamma_grammar
            .iterate(&parse("u").unwrap(), n - 1)
            .substitute(&gamma_bindings)
            .expect("positive exponents");
        rec.poly("gamma-grammar-transform", n_input(n), &a, &via_gamma);
        let via_e = e_grammar
            .iterate(&parse("w").unwrap(), n - 1)
            .substitute(&e_bindings)
            .expect("positive exponents");
        rec.poly("e-grammar-transform", n_input(n), &c, &via_e);
    }
    rec.checks
}

pub fn run_suite(suite: Suite, config: &VerifyConfig) -> Vec<Check> {
    match suite {
        Suite::Leibniz => leibniz(config),
        Suite::EulerianOracle => eulerian_oracle(config),
        Suite::StirlingOracle => stirling_oracle(config),
        Suite::GammaTrees => gamma_trees(config),
        Suite::ETrees => e_trees(config),
        Suite::NoDoubleDescent => no_double_descent(config),
        Suite::EgfClosedForms => egf_closed_forms(config),
        Suite::TreeRatio => tree_ratio(config),
        Suite::Recurrence => recurrence(config),
    }
}

/// Runs the suites on separate threads; checks are reported in the order
/// the suites were given.
pub fn run_suites(suites: &[Suite], config: &VerifyConfig) -> Report {
    let results: Vec<Vec<Check>> = std::thread::scope(|scope| {
        let handles: Vec<_> = suites
            .iter()
            .map(|&suite| scope.spawn(move || run_suite(suite, config)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite thread panicked"))
            .collect()
    });
    Report {
        checks: results.into_iter().flatten().collect(),
    }
}
