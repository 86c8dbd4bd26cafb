//! Direct and bilateral semidirect products.
//!
//! In a bilateral product `M ** N` the monoid `M` is written additively:
//! `(m₁,n₁)(m₂,n₂) = (m₁n₂ + n₁m₂, n₁n₂)`, where `n₁m₂` and `m₁n₂` are the
//! left and right actions of `N` on `M`. Element `(m, n)` has index
//! `m·|N| + n`.

use crate::error::{Error, Result};
use crate::monoid::{Element, Monoid, MAX_TABLE_ELEMENTS};

fn check_size(m: &Monoid, n: &Monoid) -> Result<usize> {
    m.size()
        .checked_mul(n.size())
        .filter(|&s| s <= MAX_TABLE_ELEMENTS)
        .ok_or(Error::Budget {
            what: "product size",
            limit: MAX_TABLE_ELEMENTS as u64,
        })
}

/// Index of `(m, n)` in a product with second factor `n_size`.
pub fn pair_index(m: Element, n: Element, n_size: usize) -> Element {
    m * n_size + n
}

/// Inverse of [`pair_index`].
pub fn pair_of(index: Element, n_size: usize) -> (Element, Element) {
    (index / n_size, index % n_size)
}

/// Shared letters get generator `(g_M(a), g_N(a))` when both factors have the
/// same letter set.
fn paired_generators(m: &Monoid, n: &Monoid) -> Option<Vec<(char, Element)>> {
    let mut ml: Vec<char> = m.generators().iter().map(|&(c, _)| c).collect();
    let mut nl: Vec<char> = n.generators().iter().map(|&(c, _)| c).collect();
    ml.sort_unstable();
    nl.sort_unstable();
    if ml.is_empty() || ml != nl {
        return None;
    }
    Some(
        m.generators()
            .iter()
            .map(|&(c, g)| (c, pair_index(g, n.generator(c).unwrap(), n.size())))
            .collect(),
    )
}

/// `M × N` with the componentwise product.
///
/// When both factors are generated by the same letters, letter `a` maps to
/// the pair of its images and representatives are recomputed; elements
/// outside the diagonal image then have none.
pub fn direct_product(m: &Monoid, n: &Monoid) -> Result<Monoid> {
    check_size(m, n)?;
    let k = n.size();
    let rows: Vec<Vec<Element>> = (0..m.size() * k)
        .map(|i| {
            let (m1, n1) = pair_of(i, k);
            (0..m.size() * k)
                .map(|j| {
                    let (m2, n2) = pair_of(j, k);
                    pair_index(m.mul(m1, m2), n.mul(n1, n2), k)
                })
                .collect()
        })
        .collect();
    let product = Monoid::from_table(rows, pair_index(m.identity(), n.identity(), k))?;
    match paired_generators(m, n) {
        Some(gens) => product.with_generators(gens),
        None => Ok(product),
    }
}

/// Left and right actions of `N` on `M`: `left[n][m] = n·m`, `right[m][n] = m·n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionPair {
    pub left: Vec<Vec<Element>>,
    pub right: Vec<Vec<Element>>,
}

impl ActionPair {
    pub fn from_fns(
        m: &Monoid,
        n: &Monoid,
        left: impl Fn(Element, Element) -> Element,
        right: impl Fn(Element, Element) -> Element,
    ) -> Self {
        ActionPair {
            left: n
                .elements()
                .map(|y| m.elements().map(|x| left(y, x)).collect())
                .collect(),
            right: m
                .elements()
                .map(|x| n.elements().map(|y| right(x, y)).collect())
                .collect(),
        }
    }

    /// Both actions fix every element.
    pub fn trivial(m: &Monoid, n: &Monoid) -> Self {
        ActionPair::from_fns(m, n, |_, x| x, |x, _| x)
    }

    /// Builds tables from `(n, m, n·m)` and `(m, n, m·n)` entries; a missing
    /// entry defaults to the trivial action.
    pub fn from_entries(
        m: &Monoid,
        n: &Monoid,
        left: &[(Element, Element, Element)],
        right: &[(Element, Element, Element)],
    ) -> Result<Self> {
        let mut pair = ActionPair::trivial(m, n);
        for &(y, x, z) in left {
            if y >= n.size() || x >= m.size() || z >= m.size() {
                return Err(Error::InvalidMonoid(format!(
                    "left action entry {y} {x} = {z} out of range"
                )));
            }
            pair.left[y][x] = z;
        }
        for &(x, y, z) in right {
            if y >= n.size() || x >= m.size() || z >= m.size() {
                return Err(Error::InvalidMonoid(format!(
                    "right action entry {x} {y} = {z} out of range"
                )));
            }
            pair.right[x][y] = z;
        }
        Ok(pair)
    }

    pub fn is_left_trivial(&self) -> bool {
        self.left.iter().all(|row| row.iter().enumerate().all(|(x, &z)| x == z))
    }

    pub fn is_right_trivial(&self) -> bool {
        self.right
            .iter()
            .enumerate()
            .all(|(x, row)| row.iter().all(|&z| z == x))
    }

    /// Checks every action axiom exhaustively; reports the first violation.
    pub fn validate(&self, m: &Monoid, n: &Monoid) -> Result<()> {
        let shape_ok = self.left.len() == n.size()
            && self
                .left
                .iter()
                .all(|r| r.len() == m.size() && r.iter().all(|&z| z < m.size()))
            && self.right.len() == m.size()
            && self
                .right
                .iter()
                .all(|r| r.len() == n.size() && r.iter().all(|&z| z < m.size()));
        if !shape_ok {
            return Err(Error::InvalidMonoid("action tables have the wrong shape".into()));
        }
        let (l, r) = (&self.left, &self.right);
        let fail = |axiom: &'static str, witness: String| Err(Error::ActionAxiom { axiom, witness });
        let zero = m.identity();
        for y in n.elements() {
            if l[y][zero] != zero {
                return fail("left: n0 = 0", format!("n={y}"));
            }
            if r[zero][y] != zero {
                return fail("right: 0n = 0", format!("n={y}"));
            }
        }
        for x in m.elements() {
            if l[n.identity()][x] != x {
                return fail("left: 1m = m", format!("m={x}"));
            }
            if r[x][n.identity()] != x {
                return fail("right: m1 = m", format!("m={x}"));
            }
        }
        for y in n.elements() {
            for x1 in m.elements() {
                for x2 in m.elements() {
                    if l[y][m.mul(x1, x2)] != m.mul(l[y][x1], l[y][x2]) {
                        return fail("left: n(m1+m2) = nm1+nm2", format!("n={y}, m1={x1}, m2={x2}"));
                    }
                    if r[m.mul(x1, x2)][y] != m.mul(r[x1][y], r[x2][y]) {
                        return fail("right: (m1+m2)n = m1n+m2n", format!("n={y}, m1={x1}, m2={x2}"));
                    }
                }
            }
        }
        for y1 in n.elements() {
            for y2 in n.elements() {
                for x in m.elements() {
                    if l[y1][l[y2][x]] != l[n.mul(y1, y2)][x] {
                        return fail("left: n1(n2m) = (n1n2)m", format!("n1={y1}, n2={y2}, m={x}"));
                    }
                    if r[r[x][y1]][y2] != r[x][n.mul(y1, y2)] {
                        return fail("right: (mn1)n2 = m(n1n2)", format!("n1={y1}, n2={y2}, m={x}"));
                    }
                    if l[y1][r[x][y2]] != r[l[y1][x]][y2] {
                        return fail("compatibility: n1(mn2) = (n1m)n2", format!("n1={y1}, n2={y2}, m={x}"));
                    }
                }
            }
        }
        Ok(())
    }
}

/// `M ** N` for validated actions; identity `(0, 1)`.
pub fn bilateral_product(m: &Monoid, n: &Monoid, actions: &ActionPair) -> Result<Monoid> {
    actions.validate(m, n)?;
    check_size(m, n)?;
    let k = n.size();
    let rows: Vec<Vec<Element>> = (0..m.size() * k)
        .map(|i| {
            let (m1, n1) = pair_of(i, k);
            (0..m.size() * k)
                .map(|j| {
                    let (m2, n2) = pair_of(j, k);
                    let first = m.mul(actions.right[m1][n2], actions.left[n1][m2]);
                    pair_index(first, n.mul(n1, n2), k)
                })
                .collect()
        })
        .collect();
    Monoid::from_table(rows, pair_index(m.identity(), n.identity(), k))
}
