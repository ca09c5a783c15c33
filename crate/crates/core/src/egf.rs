//! Truncated exponential generating functions over the polynomial ring.
//!
//! A series stores `c_0..c_N` where `c_n` is the coefficient of `t^n/n!`.
//! Products are binomial convolutions, so everything stays integral, and the
//! closed-form identities are checked in cross-multiplied form.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::expr::parse;
use crate::grammar::{Grammar, Preset};
use crate::poly::{Polynomial, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EgfError {
    #[error("series orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EgfSeries {
    coeffs: Vec<Polynomial>,
}

impl EgfSeries {
    pub fn from_coeffs(coeffs: Vec<Polynomial>) -> EgfSeries {
        assert!(
            !coeffs.is_empty(),
            "a series has at least the constant coefficient"
        );
        EgfSeries { coeffs }
    }

    pub fn zero(order: usize) -> EgfSeries {
        EgfSeries {
            coeffs: vec![Polynomial::zero(); order + 1],
        }
    }

    /// `p` as a series: `[p, 0, ..., 0]`.
    pub fn constant(p: Polynomial, order: usize) -> EgfSeries {
        let mut s = EgfSeries::zero(order);
        s.coeffs[0] = p;
        s
    }

    pub fn unit(order: usize) -> EgfSeries {
        EgfSeries::constant(Polynomial::one(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &Polynomial {
        &self.coeffs[n]
    }

    fn check_order(&self, other: &EgfSeries) -> Result<(), EgfError> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(EgfError::OrderMismatch(self.order(), other.order()))
        }
    }

    pub fn add(&self, other: &EgfSeries) -> Result<EgfSeries, EgfError> {
        self.check_order(other)?;
        Ok(EgfSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &EgfSeries) -> Result<EgfSeries, EgfError> {
        self.check_order(other)?;
        Ok(EgfSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Multiplies every coefficient by the polynomial `p`.
    pub fn scale(&self, p: &Polynomial) -> EgfSeries {
        EgfSeries {
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
        }
    }

    /// Binomial convolution `c_n = sum_k C(n,k) a_k b_(n-k)`.
    pub fn mul(&self, other: &EgfSeries) -> Result<EgfSeries, EgfError> {
        self.check_order(other)?;
        let order = self.order();
        let mut row = vec![BigInt::from(1)];
        let mut coeffs = Vec::with_capacity(order + 1);
        for n in 0..=order {
            if n > 0 {
                let mut next = vec![BigInt::from(1); n + 1];
                for k in 1..n {
                    next[k] = &row[k - 1] + &row[k];
                }
                row = next;
            }
            let mut c = Polynomial::zero();
            for (k, binom) in row.iter().enumerate() {
                let (a, b) = (&self.coeffs[k], &other.coeffs[n - k]);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                c += (a * b).scale(binom);
            }
            coeffs.push(c);
        }
        Ok(EgfSeries { coeffs })
    }

    /// Substitutes into every coefficient.
    pub fn substitute(
        &self,
        bindings: &HashMap<Var, Polynomial>,
    ) -> Result<EgfSeries, crate::poly::PolyError> {
        Ok(EgfSeries {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| c.substitute(bindings))
                .collect::<Result<_, _>>()?,
        })
    }

    /// One line per coefficient: `t^n/n!: <polynomial>`.
    pub fn render_text(&self) -> String {
        self.to_string()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "order": self.order(),
            "coeffs": self.coeffs.iter().map(Polynomial::to_json).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for EgfSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.coeffs.iter().enumerate() {
            if n > 0 {
                writeln!(f)?;
            }
            write!(f, "t^{n}/{n}!: {c}")?;
        }
        Ok(())
    }
}

/// `Gen(f, t)` truncated at order `n`: coefficients `D^k(f)`.
pub fn gen(g: &Grammar, f: &Polynomial, order: usize) -> EgfSeries {
    EgfSeries {
        coeffs: g.orbit(f, order as u32),
    }
}

/// `exp(p t)`: coefficients `p^n`.
pub fn exp_series(p: &Polynomial, order: usize) -> EgfSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(Polynomial::one().with_order_vars(p.order()));
    for n in 1..=order {
        let next = &coeffs[n - 1] * p;
        coeffs.push(next);
    }
    EgfSeries { coeffs }
}

fn xy_poly(s: &str) -> Polynomial {
    parse(s).unwrap().with_order(["x", "y"])
}

/// Generating function of the Eulerian polynomials with `A_0 = y`, checked
/// without division:
/// `(y - x) Gen(1/y) = 1 - (x/y) exp((y-x)t)` and `Gen(y) Gen(1/y) = 1`.
pub fn check_eulerian_egf(order: usize) -> bool {
    let g = Preset::DumontEulerian.grammar();
    let gen_inv = gen(&g, &xy_poly("y^-1"), order);
    let lhs = gen_inv.scale(&xy_poly("y - x"));
    let rhs = EgfSeries::unit(order)
        .sub(&exp_series(&xy_poly("y - x"), order).scale(&xy_poly("x*y^-1")))
        .expect("same order");
    let product = gen(&g, &xy_poly("y"), order)
        .mul(&gen_inv)
        .expect("same order");
    lhs == rhs && product == EgfSeries::unit(order)
}

/// Carlitz-Scoville form, cross-multiplied:
/// `(Gen(y) - y)(x e^{yt} - y e^{xt}) = xy (e^{xt} - e^{yt})`.
pub fn check_carlitz_scoville(order: usize) -> bool {
    let g = Preset::DumontEulerian.grammar();
    let x = xy_poly("x");
    let y = xy_poly("y");
    let shifted = gen(&g, &y, order)
        .sub(&EgfSeries::constant(y.clone(), order))
        .expect("same order");
    let exp_x = exp_series(&x, order);
    let exp_y = exp_series(&y, order);
    let denominator = exp_y.scale(&x).sub(&exp_x.scale(&y)).expect("same order");
    let lhs = shifted.mul(&denominator).expect("same order");
    let rhs = exp_x
        .sub(&exp_y)
        .expect("same order")
        .scale(&xy_poly("x*y"));
    lhs == rhs
}

/// Setting `y = 1` in `Gen(y)` gives the classical Eulerian polynomials:
/// each coefficient matches `A_n(x, 1)`, and the series satisfies
/// `Gen(y)|_{y=1} (1 - x e^{(1-x)t}) = 1 - x`.
pub fn check_classical_specialization(order: usize) -> bool {
    let g = Preset::DumontEulerian.grammar();
    let at_one = HashMap::from([(Var::new("y"), Polynomial::one())]);
    let Ok(special) = gen(&g, &xy_poly("y"), order).substitute(&at_one) else {
        return false;
    };
    for n in 1..=order {
        let a_n = crate::grammar::eulerian(n as u32).expect("n >= 1");
        match a_n.substitute(&at_one) {
            Ok(a) if a == special.coeffs[n] => {}
            _ => return false,
        }
    }
    let denominator = EgfSeries::unit(order)
        .sub(&exp_series(&xy_poly("1 - x"), order).scale(&xy_poly("x")))
        .expect("same order");
    special.mul(&denominator).expect("same order") == EgfSeries::constant(xy_poly("1 - x"), order)
}
