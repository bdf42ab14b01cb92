//! Quadratic Gröbner basis test for binomial edge ideals.
//!
//! The ideal of a graph on `1..=n` lives in `K[x_1..x_n, y_1..y_n]` and is
//! generated by `f_ij = x_i y_j - x_j y_i` for the edges `i < j`. This
//! module decides whether those generators are already a Gröbner basis
//! under lex with `x_1 > ... > x_n > y_1 > ... > y_n`, by reducing every
//! S-pair against them. All polynomials involved are differences of two
//! monomials, so no field arithmetic is needed and signs are tracked only
//! up to an overall factor of -1.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_VERTICES: u32 = 12;
pub const MAX_EDGES: usize = 40;

/// Exponent vector over `x_1..x_n, y_1..y_n`, in that order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u8>,
}

impl Monomial {
    pub fn one(n: u32) -> Monomial {
        Monomial {
            exponents: vec![0; 2 * n as usize],
        }
    }

    /// `x_i * y_j`.
    pub fn xy(n: u32, i: u32, j: u32) -> Monomial {
        let mut m = Monomial::one(n);
        m.exponents[i as usize - 1] += 1;
        m.exponents[(n + j) as usize - 1] += 1;
        m
    }

    pub fn from_exponents(exponents: Vec<u8>) -> Monomial {
        assert!(
            exponents.len().is_multiple_of(2),
            "need one x and one y exponent per vertex"
        );
        Monomial { exponents }
    }

    pub fn exponents(&self) -> &[u8] {
        &self.exponents
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a + b)
    }

    /// `self / other`; `other` must divide `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        self.zip_with(other, |a, b| a - b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, u8::max)
    }

    fn zip_with(&self, other: &Monomial, f: impl Fn(u8, u8) -> u8) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.exponents.len() / 2;
        let mut factors = Vec::new();
        for (idx, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let name = if idx < n {
                format!("x{}", idx + 1)
            } else {
                format!("y{}", idx - n + 1)
            };
            factors.push(if e == 1 { name } else { format!("{name}^{e}") });
        }
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("*"))
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Monomial order used throughout.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TermOrder {
    /// Lex with `x_1 > ... > x_n > y_1 > ... > y_n`.
    #[default]
    Lex,
}

impl TermOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            // First differing exponent in precedence order decides.
            TermOrder::Lex => a.exponents.cmp(&b.exponents),
        }
    }
}

/// `lead - trail` with `lead` above `trail`, or the single term `lead`
/// when `trail` is `None`. Zero is represented outside this type, as
/// `Option::<Binomial>::None`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Binomial {
    pub lead: Monomial,
    pub trail: Option<Monomial>,
}

impl Binomial {
    /// `a - b` (or its negation) in normalized form; `None` if `a == b`.
    pub fn difference(a: Monomial, b: Monomial, ord: TermOrder) -> Option<Binomial> {
        match ord.cmp(&a, &b) {
            Ordering::Equal => None,
            Ordering::Greater => Some(Binomial {
                lead: a,
                trail: Some(b),
            }),
            Ordering::Less => Some(Binomial {
                lead: b,
                trail: Some(a),
            }),
        }
    }

    pub fn monomial(m: Monomial) -> Binomial {
        Binomial {
            lead: m,
            trail: None,
        }
    }

    /// `x_i y_j - x_j y_i` for `i < j`.
    pub fn edge(n: u32, i: u32, j: u32) -> Binomial {
        assert!(i < j, "edge binomials use i < j");
        Binomial {
            lead: Monomial::xy(n, i, j),
            trail: Some(Monomial::xy(n, j, i)),
        }
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.trail {
            Some(t) => write!(f, "{} - {}", self.lead, t),
            None => write!(f, "{}", self.lead),
        }
    }
}

impl fmt::Debug for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// One generator per edge `{i, j}`, `i < j`, in lexicographic edge order.
pub fn edge_binomials(g: &Graph) -> Vec<Binomial> {
    g.edges()
        .map(|(i, j)| Binomial::edge(g.n(), i, j))
        .collect()
}

/// S-polynomial `(l / lead f) f - (l / lead g) g` with `l` the lcm of the
/// leading monomials; `None` when it vanishes.
pub fn s_polynomial(f: &Binomial, g: &Binomial, ord: TermOrder) -> Option<Binomial> {
    let l = f.lead.lcm(&g.lead);
    // The leading terms cancel; what is left is  (l/Lg) Tg - (l/Lf) Tf.
    let from_g = g.trail.as_ref().map(|t| l.div(&g.lead).mul(t));
    let from_f = f.trail.as_ref().map(|t| l.div(&f.lead).mul(t));
    combine(from_g, from_f, ord)
}

fn combine(a: Option<Monomial>, b: Option<Monomial>, ord: TermOrder) -> Option<Binomial> {
    match (a, b) {
        (Some(a), Some(b)) => Binomial::difference(a, b, ord),
        (Some(m), None) | (None, Some(m)) => Some(Binomial::monomial(m)),
        (None, None) => None,
    }
}

/// Fully reduces `p` modulo `basis`: leading-term steps first, then
/// trailing-term steps once no basis lead divides the leading term.
/// Returns the remainder, `None` for zero.
pub fn reduce(p: &Binomial, basis: &[Binomial], ord: TermOrder) -> Option<Binomial> {
    let mut p = p.clone();
    loop {
        let next = if let Some(b) = basis.iter().find(|b| b.lead.divides(&p.lead)) {
            // p - q b = q Tb - Tp
            let q = p.lead.div(&b.lead);
            combine(b.trail.as_ref().map(|t| q.mul(t)), p.trail.clone(), ord)
        } else if let Some((b, t)) = p
            .trail
            .as_ref()
            .and_then(|t| basis.iter().find(|b| b.lead.divides(t)).map(|b| (b, t)))
        {
            // p + q b = Lp - q Tb
            let q = t.div(&b.lead);
            combine(
                Some(p.lead.clone()),
                b.trail.as_ref().map(|bt| q.mul(bt)),
                ord,
            )
        } else {
            return Some(p);
        };
        let next = next?;
        assert!(
            decreases(&next, &p, ord),
            "reduction step did not decrease: {p} -> {next}"
        );
        p = next;
    }
}

// (lead, trail) strictly decreasing, with a missing trail below any monomial.
fn decreases(new: &Binomial, old: &Binomial, ord: TermOrder) -> bool {
    match ord.cmp(&new.lead, &old.lead) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => match (&new.trail, &old.trail) {
            (None, Some(_)) => true,
            (Some(a), Some(b)) => ord.cmp(a, b) == Ordering::Less,
            _ => false,
        },
    }
}

/// Outcome of the quadratic Gröbner basis test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroebnerVerdict {
    /// Every S-pair reduced to zero.
    Basis { pairs_checked: usize },
    /// The first S-pair, in lexicographic edge order, with a nonzero
    /// remainder.
    Failing {
        edges: ((u32, u32), (u32, u32)),
        remainder: Binomial,
    },
}

impl GroebnerVerdict {
    pub fn is_basis(&self) -> bool {
        matches!(self, GroebnerVerdict::Basis { .. })
    }
}

/// Decides whether the edge binomials of `g` form a Gröbner basis under
/// the fixed lex order. Desk scale only: at most 12 vertices, 40 edges.
pub fn is_quadratic_groebner(g: &Graph) -> Result<GroebnerVerdict> {
    if g.n() > MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "vertex count",
            actual: g.n() as usize,
            limit: MAX_VERTICES as usize,
        });
    }
    if g.m() > MAX_EDGES {
        return Err(Error::TooLarge {
            what: "edge count",
            actual: g.m(),
            limit: MAX_EDGES,
        });
    }
    let ord = TermOrder::Lex;
    let edges: Vec<(u32, u32)> = g.edges().collect();
    let gens = edge_binomials(g);
    let mut pairs_checked = 0;
    for a in 0..gens.len() {
        for b in a + 1..gens.len() {
            pairs_checked += 1;
            let Some(s) = s_polynomial(&gens[a], &gens[b], ord) else {
                continue;
            };
            if let Some(remainder) = reduce(&s, &gens, ord) {
                return Ok(GroebnerVerdict::Failing {
                    edges: (edges[a], edges[b]),
                    remainder,
                });
            }
        }
    }
    Ok(GroebnerVerdict::Basis { pairs_checked })
}
