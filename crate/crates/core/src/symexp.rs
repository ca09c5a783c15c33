//! Expansions of symmetric polynomials in the gamma basis
//! `(xy)^k (x+y)^(n+1-2k)` and in the elementary symmetric functions
//! `u = x+y+z, v = xy+xz+yz, w = xyz`.
//!
//! Each table can be produced three ways: leading-term reduction of the
//! polynomial itself, reading off the transformed grammar, and (for the
//! elementary basis) the coefficient recurrence.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::json;
use thiserror::Error;

use crate::grammar::Preset;
use crate::poly::{Monomial, PolyError, Polynomial, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExpansionError {
    #[error("polynomial is not symmetric in {0}")]
    NotSymmetric(String),
    #[error("polynomial involves `{0}`, outside the expansion variables")]
    ForeignVariable(String),
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("term `{0}` is not divisible by x*y")]
    NotDivisibleByXy(String),
    #[error("term `{0}` has a negative exponent")]
    NegativeExponent(String),
    #[error("degree {degree} does not match the expected form {expected}")]
    DegreeMismatch { degree: i64, expected: &'static str },
    #[error("reduction left a nonzero remainder: {0}")]
    NonzeroRemainder(String),
    #[error("grammar produced an unexpected term `{0}`")]
    UnexpectedTerm(String),
    #[error("index must be at least 1, got {0}")]
    IndexOutOfRange(u32),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

fn xyz() -> [Var; 3] {
    [Var::new("x"), Var::new("y"), Var::new("z")]
}

fn uvw() -> [Var; 3] {
    [Var::new("u"), Var::new("v"), Var::new("w")]
}

/// `A_n(x,y) = sum_k gamma[k] (xy)^k (x+y)^(n+1-2k)`; only nonzero
/// coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaExpansion {
    pub n: u32,
    pub coefficients: BTreeMap<u32, BigInt>,
    pub positive: bool,
}

/// `C_n(x,y,z) = sum gamma[(i,j,k)] u^i v^j w^k` with `i+2j+3k = 2n+1`;
/// only nonzero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EExpansion {
    pub n: u32,
    pub coefficients: BTreeMap<(u32, u32, u32), BigInt>,
    pub positive: bool,
}

fn all_nonnegative<'a>(values: impl IntoIterator<Item = &'a BigInt>) -> bool {
    values.into_iter().all(|c| !c.is_negative())
}

impl GammaExpansion {
    fn new(n: u32, coefficients: BTreeMap<u32, BigInt>) -> GammaExpansion {
        let positive = all_nonnegative(coefficients.values());
        GammaExpansion {
            n,
            coefficients,
            positive,
        }
    }

    /// Rebuilds the polynomial in `x, y`.
    pub fn reconstruct(&self) -> Polynomial {
        let x = Polynomial::var("x");
        let y = Polynomial::var("y");
        let xy = &x * &y;
        let sum = &x + &y;
        let mut out = Polynomial::zero();
        for (&k, c) in &self.coefficients {
            let part =
                &xy.pow(k as i64).unwrap() * &sum.pow(self.n as i64 + 1 - 2 * k as i64).unwrap();
            out += part.scale(c);
        }
        out.with_order(["x", "y"])
    }

    /// Same coefficients as a polynomial `sum gamma[k] u^k v^(n+1-2k)`.
    pub fn as_uv_polynomial(&self) -> Polynomial {
        let [u, v, _] = uvw();
        Polynomial::from_terms(self.coefficients.iter().map(|(&k, c)| {
            let m = Monomial::from_pairs([(u, k as i64), (v, self.n as i64 + 1 - 2 * k as i64)]);
            (m, c.clone())
        }))
        .with_order_vars(&[u, v])
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<_> = self
            .coefficients
            .iter()
            .map(|(k, c)| json!({ "index": [k], "coeff": c.to_string() }))
            .collect();
        json!({ "n": self.n, "basis": "gamma", "entries": entries, "positive": self.positive })
    }
}

impl EExpansion {
    fn new(n: u32, coefficients: BTreeMap<(u32, u32, u32), BigInt>) -> EExpansion {
        let positive = all_nonnegative(coefficients.values());
        EExpansion {
            n,
            coefficients,
            positive,
        }
    }

    /// Rebuilds the polynomial in `x, y, z`.
    pub fn reconstruct(&self) -> Result<Polynomial, ExpansionError> {
        let [u, v, w] = uvw();
        let bindings = HashMap::from([
            (u, crate::expr::parse("x+y+z").unwrap()),
            (v, crate::expr::parse("x*y+x*z+y*z").unwrap()),
            (w, crate::expr::parse("x*y*z").unwrap()),
        ]);
        Ok(self
            .as_uvw_polynomial()
            .substitute(&bindings)?
            .with_order_vars(&xyz()))
    }

    pub fn as_uvw_polynomial(&self) -> Polynomial {
        let [u, v, w] = uvw();
        Polynomial::from_terms(self.coefficients.iter().map(|(&(i, j, k), c)| {
            (
                Monomial::from_pairs([(u, i as i64), (v, j as i64), (w, k as i64)]),
                c.clone(),
            )
        }))
        .with_order_vars(&[u, v, w])
    }

    /// True iff every stored triple has weight `i + 2j + 3k = 2n + 1`.
    pub fn weights_consistent(&self) -> bool {
        self.coefficients
            .keys()
            .all(|&(i, j, k)| i + 2 * j + 3 * k == 2 * self.n + 1)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<_> = self
            .coefficients
            .iter()
            .map(|(&(i, j, k), c)| json!({ "index": [i, j, k], "coeff": c.to_string() }))
            .collect();
        json!({ "n": self.n, "basis": "elementary", "entries": entries, "positive": self.positive })
    }
}

fn check_variables(p: &Polynomial, allowed: &[Var]) -> Result<(), ExpansionError> {
    match p.variables().into_iter().find(|v| !allowed.contains(v)) {
        Some(v) => Err(ExpansionError::ForeignVariable(v.name().to_string())),
        None => Ok(()),
    }
}

/// Gamma expansion of a symmetric homogeneous polynomial in `x, y` whose
/// terms are all divisible by `xy`. The degree `n + 1` determines `n`.
pub fn gamma_expand(p: &Polynomial) -> Result<GammaExpansion, ExpansionError> {
    let [x, y, _] = xyz();
    check_variables(p, &[x, y])?;
    if !p.is_symmetric(&[x, y]) {
        return Err(ExpansionError::NotSymmetric("x, y".into()));
    }
    let degree = p
        .homogeneous_degree()
        .ok_or(ExpansionError::NotHomogeneous)?;
    if degree < 2 {
        return Err(ExpansionError::DegreeMismatch {
            degree,
            expected: "n + 1 with n >= 1",
        });
    }
    for (m, _) in p.terms() {
        if m.exponent(x) < 1 || m.exponent(y) < 1 {
            return Err(ExpansionError::NotDivisibleByXy(format!("{m:?}")));
        }
    }
    let n = (degree - 1) as u32;
    let xy = Polynomial::term(1, Monomial::from_pairs([(x, 1), (y, 1)]));
    let sum = &Polynomial::var(x) + &Polynomial::var(y);
    let mut rest = p.clone();
    let mut coefficients = BTreeMap::new();
    while let Some((m, c)) = rest.leading_term(&[x, y]) {
        let (a, b) = (m.exponent(x), m.exponent(y));
        if b < 1 || a < b {
            return Err(ExpansionError::NonzeroRemainder(rest.to_string()));
        }
        let c = c.clone();
        let basis = &xy.pow(b)? * &sum.pow(a - b)?;
        rest -= &basis.scale(&c);
        coefficients.insert(b as u32, c);
    }
    Ok(GammaExpansion::new(n, coefficients))
}

/// Decomposes a symmetric polynomial in `x, y, z` into `u^i v^j w^k` by
/// repeatedly removing the graded-lex leading term `c x^a y^b z^d`
/// (`a >= b >= d`) as `c u^(a-b) v^(b-d) w^d`.
pub fn elementary_decompose(
    p: &Polynomial,
) -> Result<BTreeMap<(u32, u32, u32), BigInt>, ExpansionError> {
    let vars = xyz();
    let [x, y, z] = vars;
    check_variables(p, &vars)?;
    if !p.is_symmetric(&vars) {
        return Err(ExpansionError::NotSymmetric("x, y, z".into()));
    }
    for (m, _) in p.terms() {
        if m.exponents().iter().any(|&(_, e)| e < 0) {
            return Err(ExpansionError::NegativeExponent(format!("{m:?}")));
        }
    }
    let e1 = crate::expr::parse("x+y+z").unwrap();
    let e2 = crate::expr::parse("x*y+x*z+y*z").unwrap();
    let e3 = crate::expr::parse("x*y*z").unwrap();
    let mut powers: [Vec<Polynomial>; 3] = [
        vec![Polynomial::one()],
        vec![Polynomial::one()],
        vec![Polynomial::one()],
    ];
    let mut power = |which: usize, e: usize| -> Polynomial {
        let base = [&e1, &e2, &e3][which];
        while powers[which].len() <= e {
            let next = powers[which].last().unwrap() * base;
            powers[which].push(next);
        }
        powers[which][e].clone()
    };

    let mut rest = p.clone();
    let mut out = BTreeMap::new();
    while let Some((m, c)) = rest.leading_term(&vars) {
        let (a, b, d) = (m.exponent(x), m.exponent(y), m.exponent(z));
        if !(a >= b && b >= d) {
            return Err(ExpansionError::NonzeroRemainder(rest.to_string()));
        }
        let (i, j, k) = ((a - b) as u32, (b - d) as u32, d as u32);
        let c = c.clone();
        let basis = &(&power(0, i as usize) * &power(1, j as usize)) * &power(2, k as usize);
        rest -= &basis.scale(&c);
        out.insert((i, j, k), c);
    }
    Ok(out)
}

/// Elementary expansion of `C_n`-shaped input: symmetric, homogeneous of odd
/// degree `2n + 1`.
pub fn e_expand(p: &Polynomial) -> Result<EExpansion, ExpansionError> {
    let degree = p
        .homogeneous_degree()
        .ok_or(ExpansionError::NotHomogeneous)?;
    if degree < 3 || degree % 2 == 0 {
        return Err(ExpansionError::DegreeMismatch {
            degree,
            expected: "2n + 1 with n >= 1",
        });
    }
    let coefficients = elementary_decompose(p)?;
    Ok(EExpansion::new(((degree - 1) / 2) as u32, coefficients))
}

/// Gamma table read from `D^(n-1)(u)` under `{u -> uv, v -> 2u}`.
pub fn gamma_table_via_grammar(n: u32) -> Result<GammaExpansion, ExpansionError> {
    if n == 0 {
        return Err(ExpansionError::IndexOutOfRange(n));
    }
    let [u, v, _] = uvw();
    let poly = Preset::GammaEulerian
        .grammar()
        .iterate(&Polynomial::var(u), n - 1);
    let mut coefficients = BTreeMap::new();
    for (m, c) in poly.terms() {
        let (k, rest) = (m.exponent(u), m.exponent(v));
        let expected = Monomial::from_pairs([(u, k), (v, n as i64 + 1 - 2 * k)]);
        if k < 1 || rest < 0 || *m != expected {
            return Err(ExpansionError::UnexpectedTerm(format!("{m:?}")));
        }
        coefficients.insert(k as u32, c.clone());
    }
    Ok(GammaExpansion::new(n, coefficients))
}

/// Elementary table read from `D^(n-1)(w)` under `{u -> 3w, v -> 2uw, w -> vw}`.
pub fn e_table_via_grammar(n: u32) -> Result<EExpansion, ExpansionError> {
    if n == 0 {
        return Err(ExpansionError::IndexOutOfRange(n));
    }
    let [u, v, w] = uvw();
    let poly = Preset::ETrivariate
        .grammar()
        .iterate(&Polynomial::var(w), n - 1);
    let mut coefficients = BTreeMap::new();
    for (m, c) in poly.terms() {
        let (i, j, k) = (m.exponent(u), m.exponent(v), m.exponent(w));
        let expected = Monomial::from_pairs([(u, i), (v, j), (w, k)]);
        if i < 0 || j < 0 || k < 0 || *m != expected {
            return Err(ExpansionError::UnexpectedTerm(format!("{m:?}")));
        }
        coefficients.insert((i as u32, j as u32, k as u32), c.clone());
    }
    Ok(EExpansion::new(n, coefficients))
}

/// Elementary table from the coefficient recurrence
/// `g[n](i,j,k) = 3(i+1) g[n-1](i+1,j,k-1) + 2(j+1) g[n-1](i-1,j+1,k-1) + k g[n-1](i,j-1,k)`
/// seeded with `g[1](0,0,1) = 1`.
pub fn e_table_via_recurrence(n: u32) -> Result<EExpansion, ExpansionError> {
    if n == 0 {
        return Err(ExpansionError::IndexOutOfRange(n));
    }
    let mut table: BTreeMap<(u32, u32, u32), BigInt> =
        BTreeMap::from([((0, 0, 1), BigInt::from(1))]);
    for m in 2..=n {
        let prev = table;
        let get = |i: i64, j: i64, k: i64| -> BigInt {
            if i < 0 || j < 0 || k < 0 {
                return BigInt::zero();
            }
            prev.get(&(i as u32, j as u32, k as u32))
                .cloned()
                .unwrap_or_default()
        };
        let weight = 2 * m + 1;
        let mut next = BTreeMap::new();
        for k in 0..=weight / 3 {
            for j in 0..=(weight - 3 * k) / 2 {
                let i = weight - 3 * k - 2 * j;
                let (i, j, k) = (i as i64, j as i64, k as i64);
                let value = get(i + 1, j, k - 1) * (3 * (i + 1))
                    + get(i - 1, j + 1, k - 1) * (2 * (j + 1))
                    + get(i, j - 1, k) * k;
                if !value.is_zero() {
                    next.insert((i as u32, j as u32, k as u32), value);
                }
            }
        }
        table = next;
    }
    Ok(EExpansion::new(n, table))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;
    use crate::grammar::{eulerian, second_order};

    fn gamma(pairs: &[(u32, i64)]) -> BTreeMap<u32, BigInt> {
        pairs.iter().map(|&(k, c)| (k, BigInt::from(c))).collect()
    }

    fn etab(pairs: &[((u32, u32, u32), i64)]) -> BTreeMap<(u32, u32, u32), BigInt> {
        pairs.iter().map(|&(k, c)| (k, BigInt::from(c))).collect()
    }

    #[test]
    fn gamma_expand_examples() {
        let g1 = gamma_expand(&parse("x*y").unwrap()).unwrap();
        assert_eq!((g1.n, g1.coefficients.clone()), (1, gamma(&[(1, 1)])));

        let a3 = parse("x*y^3 + 4*x^2*y^2 + x^3*y").unwrap();
        let g3 = gamma_expand(&a3).unwrap();
        assert_eq!(g3.coefficients, gamma(&[(1, 1), (2, 2)]));
        assert!(g3.positive);

        let a5 = parse("x*y^5 + 26*x^2*y^4 + 66*x^3*y^3 + 26*x^4*y^2 + x^5*y").unwrap();
        assert_eq!(
            gamma_expand(&a5).unwrap().coefficients,
            gamma(&[(1, 1), (2, 22), (3, 16)])
        );
    }

    #[test]
    fn gamma_expand_rejects_bad_input() {
        assert!(matches!(
            gamma_expand(&parse("x^2*y").unwrap()),
            Err(ExpansionError::NotSymmetric(_))
        ));
        assert!(matches!(
            gamma_expand(&parse("x^2 + y^2").unwrap()),
            Err(ExpansionError::NotDivisibleByXy(_))
        ));
        assert!(matches!(
            gamma_expand(&parse("x*y + x^2*y^2").unwrap()),
            Err(ExpansionError::NotHomogeneous)
        ));
        assert!(matches!(
            gamma_expand(&parse("x*y*z").unwrap()),
            Err(ExpansionError::ForeignVariable(_))
        ));
    }

    #[test]
    fn gamma_expand_reports_signs() {
        // (xy)(x+y)^2 - 3(xy)^2 = x^3y - x^2y^2 + xy^3
        let g = gamma_expand(&parse("x^3*y - x^2*y^2 + x*y^3").unwrap()).unwrap();
        assert_eq!(g.coefficients, gamma(&[(1, 1), (2, -3)]));
        assert!(!g.positive);
        assert_eq!(g.reconstruct(), parse("x^3*y - x^2*y^2 + x*y^3").unwrap());
    }

    #[test]
    fn e_expand_examples() {
        let e1 = e_expand(&parse("x*y*z").unwrap()).unwrap();
        assert_eq!(
            (e1.n, e1.coefficients.clone()),
            (1, etab(&[((0, 0, 1), 1)]))
        );
        let c2 = second_order(2).unwrap();
        assert_eq!(e_expand(&c2).unwrap().coefficients, etab(&[((0, 1, 1), 1)]));
        let c3 = second_order(3).unwrap();
        assert_eq!(
            e_expand(&c3).unwrap().coefficients,
            etab(&[((1, 0, 2), 2), ((0, 2, 1), 1)])
        );
    }

    #[test]
    fn e_expand_rejects_bad_input() {
        assert!(matches!(
            e_expand(&parse("x^3*y*z").unwrap()),
            Err(ExpansionError::NotSymmetric(_))
        ));
        assert!(matches!(
            e_expand(&parse("x*y + x*z + y*z").unwrap()),
            Err(ExpansionError::DegreeMismatch { degree: 2, .. })
        ));
    }

    #[test]
    fn elementary_decompose_general_symmetric() {
        // x^2 + y^2 + z^2 = u^2 - 2v
        let d = elementary_decompose(&parse("x^2+y^2+z^2").unwrap()).unwrap();
        assert_eq!(d, etab(&[((2, 0, 0), 1), ((0, 1, 0), -2)]));
        assert_eq!(
            elementary_decompose(&parse("5").unwrap()).unwrap(),
            etab(&[((0, 0, 0), 5)])
        );
    }

    #[test]
    fn grammar_routes() {
        assert_eq!(
            gamma_table_via_grammar(2).unwrap().coefficients,
            gamma(&[(1, 1)])
        );
        assert_eq!(
            gamma_table_via_grammar(3).unwrap().coefficients,
            gamma(&[(1, 1), (2, 2)])
        );
        let a6 = parse("x*y^6+57*x^2*y^5+302*x^3*y^4+302*x^4*y^3+57*x^5*y^2+x^6*y").unwrap();
        assert_eq!(
            gamma_table_via_grammar(6).unwrap(),
            gamma_expand(&a6).unwrap()
        );

        assert_eq!(
            e_table_via_grammar(1).unwrap().coefficients,
            etab(&[((0, 0, 1), 1)])
        );
        assert_eq!(
            e_table_via_grammar(2).unwrap().coefficients,
            etab(&[((0, 1, 1), 1)])
        );
        assert_eq!(
            e_table_via_grammar(3).unwrap().coefficients,
            etab(&[((1, 0, 2), 2), ((0, 2, 1), 1)])
        );
    }

    #[test]
    fn recurrence_route() {
        assert_eq!(
            e_table_via_recurrence(1).unwrap().coefficients,
            etab(&[((0, 0, 1), 1)])
        );
        assert_eq!(
            e_table_via_recurrence(2).unwrap().coefficients,
            etab(&[((0, 1, 1), 1)])
        );
        assert_eq!(
            e_table_via_recurrence(4).unwrap(),
            e_table_via_grammar(4).unwrap()
        );
        // n = 5 cross-checked against a sympy symmetrize() run over the
        // brute-force Stirling-permutation polynomial.
        assert_eq!(
            e_table_via_recurrence(5).unwrap().coefficients,
            etab(&[
                ((2, 0, 3), 16),
                ((1, 2, 2), 22),
                ((0, 4, 1), 1),
                ((0, 1, 3), 42)
            ])
        );
        assert!(e_table_via_recurrence(0).is_err());
    }

    #[test]
    fn reconstruction_and_identities() {
        for n in 1..=9u32 {
            let a = eulerian(n).unwrap();
            let g = gamma_expand(&a).unwrap();
            assert_eq!(g.reconstruct(), a);
            let weighted: BigInt = g
                .coefficients
                .iter()
                .map(|(&k, c)| c * (BigInt::from(1) << (n + 1 - 2 * k)))
                .sum();
            let factorial: BigInt = (1..=n).map(BigInt::from).product();
            assert_eq!(weighted, factorial);
            assert!(g.coefficients.keys().all(|&k| 1 <= k && k <= n.div_ceil(2)));
        }
        for n in 1..=6u32 {
            let c = second_order(n).unwrap();
            let e = e_expand(&c).unwrap();
            assert_eq!(e.reconstruct().unwrap(), c);
            assert!(e.weights_consistent());
        }
    }

    #[test]
    fn json_tables() {
        let g = gamma_table_via_grammar(3).unwrap();
        assert_eq!(
            g.to_json(),
            serde_json::json!({
                "n": 3, "basis": "gamma", "positive": true,
                "entries": [{"index": [1], "coeff": "1"}, {"index": [2], "coeff": "2"}]
            })
        );
        let e = e_table_via_recurrence(3).unwrap();
        assert_eq!(
            e.to_json()["entries"][0]["index"],
            serde_json::json!([0, 2, 1])
        );
        assert_eq!(e.to_json()["basis"], "elementary");
    }
}
