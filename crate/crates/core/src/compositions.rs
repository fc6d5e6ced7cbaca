//! Compositions, their multiplicities, and the coefficient tables behind
//! the recursive Q-curvature formulas.
//!
//! A composition is an ordered sequence of parts `>= 1`; two orderings of
//! the same summands count as different compositions. The multiplicity of
//! `I = (I_1, ..., I_r)` of size `N = |I|` is
//!
//! ```text
//! m_I = -(-1)^r N! (N-1)! prod_j 1/(I_j! (I_j - 1)!) prod_j 1/(I_j + I_{j+1})
//! ```
//!
//! with empty products read as one, so `m_(N) = 1` for every `N >= 1`.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::CombinatoricsError;
use crate::rational::Rat;

/// An ordered composition of a positive integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self, CombinatoricsError> {
        if parts.is_empty() || parts.iter().any(|&p| p == 0) {
            return Err(CombinatoricsError::InvalidComposition);
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The size `|I|`, the sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts `r`.
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }
}

impl std::fmt::Display for Composition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

fn factorial(k: usize) -> &'static BigInt {
    // Exact factorials, memoized through 16 (the largest index any table
    // based on compositions of size <= 8 can request is 8).
    static TABLE: OnceLock<Vec<BigInt>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        let mut out = vec![BigInt::one()];
        for i in 1..=16u32 {
            let next = out.last().unwrap() * BigInt::from(i);
            out.push(next);
        }
        out
    });
    &table[k]
}

fn factorial_rat(k: usize) -> Rat {
    Rat::from_bigint(factorial(k).clone())
}

/// All `2^(N-1)` compositions of `N`, in lexicographic order of parts.
pub fn enumerate_compositions(n: i64) -> Result<Vec<Composition>, CombinatoricsError> {
    if n < 1 {
        return Err(CombinatoricsError::InvalidN(n));
    }
    let n = n as u32;
    let mut out = Vec::with_capacity(1 << (n - 1));
    let mut current = Vec::new();
    fn recurse(remaining: u32, current: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if remaining == 0 {
            out.push(Composition {
                parts: current.clone(),
            });
            return;
        }
        for first in 1..=remaining {
            current.push(first);
            recurse(remaining - first, current, out);
            current.pop();
        }
    }
    recurse(n, &mut current, &mut out);
    Ok(out)
}

/// The exact multiplicity `m_I` of a composition.
pub fn multiplicity(i: &Composition) -> Rat {
    let r = i.num_parts();
    let size = i.size() as usize;
    let sign = if r % 2 == 0 { 1 } else { -1 };
    // -(-1)^r N! (N-1)!
    let mut acc = factorial_rat(size) * factorial_rat(size - 1) * Rat::from_int(-sign);
    for &part in i.parts() {
        let p = part as usize;
        acc = acc / (factorial_rat(p) * factorial_rat(p - 1));
    }
    for pair in i.parts().windows(2) {
        acc = acc / Rat::from_int((pair[0] + pair[1]) as i64);
    }
    acc
}

/// Sum of `m_I` over all compositions of `N` (zero for every `N >= 2`).
pub fn multiplicity_sum(n: i64) -> Result<Rat, CombinatoricsError> {
    let mut acc = Rat::zero();
    for comp in enumerate_compositions(n)? {
        acc = acc + multiplicity(&comp);
    }
    Ok(acc)
}

/// One term of a recursion table: the operator word `I` (empty for the
/// bare curvature term), the curvature order index `a`, and its rational
/// coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableEntry {
    /// Indices of the composed operators `P_{2 I_1} ... P_{2 I_r}`.
    pub word: Vec<u32>,
    /// Index of the curvature `Q_{2a}`, with `a >= 1`.
    pub a: u32,
    pub coefficient: Rat,
}

/// The coefficients of the solved recursive formula
///
/// ```text
/// Q_{2N} = sum_{(I,a), a >= 1, (I,a) != ((),N)} c_{(I,a)} P_{2I}(Q_{2a})
///          + (-1)^N N! (N-1)! 2^{2N} w_{2N},
/// ```
///
/// where `c_{(I,a)} = -(-1)^{a+N} m_{(I_1,...,I_r,a)}`. The entry for the
/// empty word carries coefficient one: it is the `Q_{2N}` term itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecursionTable {
    n: u32,
    entries: Vec<TableEntry>,
    rhs_scale: Rat,
}

impl RecursionTable {
    pub fn order(&self) -> u32 {
        self.n
    }

    /// Entries in lexicographic order of `(word, a)`, the empty word first.
    pub fn entries(&self) -> &[TableEntry] {
        &self.entries
    }

    /// Coefficient of `w_{2N}` in the solved formula:
    /// `(-1)^N N! (N-1)! 2^{2N}`.
    pub fn rhs_scale(&self) -> &Rat {
        &self.rhs_scale
    }

    pub fn entry(&self, word: &[u32], a: u32) -> Option<&TableEntry> {
        self.entries
            .iter()
            .find(|e| e.word == word && e.a == a)
    }
}

/// Builds the recursion table for `Q_{2N}`.
pub fn build_recursion_table(n: i64) -> Result<RecursionTable, CombinatoricsError> {
    if n < 1 {
        return Err(CombinatoricsError::InvalidN(n));
    }
    let n = n as u32;
    let sign_n = if n % 2 == 0 { 1 } else { -1 };
    let mut entries = Vec::new();
    // Split every composition of N as (word, last part a).
    for comp in enumerate_compositions(n as i64)? {
        let (last, word) = comp.parts().split_last().unwrap();
        let a = *last;
        let coefficient = if word.is_empty() {
            Rat::one()
        } else {
            // -(-1)^{a+N} m_{(I,a)}
            let sign_a = if a % 2 == 0 { 1 } else { -1 };
            multiplicity(&comp) * Rat::from_int(-(sign_a * sign_n) as i64)
        };
        entries.push(TableEntry {
            word: word.to_vec(),
            a,
            coefficient,
        });
    }
    entries.sort_by(|x, y| (&x.word, x.a).cmp(&(&y.word, y.a)));
    let rhs_scale = factorial_rat(n as usize)
        * factorial_rat(n as usize - 1)
        * Rat::from_int(2).pow(2 * n as i32)
        * Rat::from_int(sign_n as i64);
    Ok(RecursionTable {
        n,
        entries,
        rhs_scale,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_is_lexicographic_and_complete() {
        let one = enumerate_compositions(1).unwrap();
        assert_eq!(one, vec![comp(&[1])]);

        let three = enumerate_compositions(3).unwrap();
        assert_eq!(
            three,
            vec![comp(&[1, 1, 1]), comp(&[1, 2]), comp(&[2, 1]), comp(&[3])]
        );

        let four = enumerate_compositions(4).unwrap();
        assert_eq!(four.len(), 8);
        assert!(four.iter().all(|c| c.size() == 4));

        assert_eq!(
            enumerate_compositions(0),
            Err(CombinatoricsError::InvalidN(0))
        );
    }

    #[test]
    fn singleton_multiplicity_is_one() {
        for n in 1..=12 {
            assert_eq!(multiplicity(&comp(&[n])), int(1));
        }
    }

    #[test]
    fn multiplicity_values() {
        assert_eq!(multiplicity(&comp(&[1, 3])), int(-3));
        assert_eq!(multiplicity(&comp(&[3, 1])), int(-3));
        assert_eq!(multiplicity(&comp(&[1, 1, 1, 1])), int(-18));
        assert_eq!(multiplicity(&comp(&[1, 1])), int(-1));
        assert_eq!(multiplicity(&comp(&[2, 2])), int(-9));
        assert_eq!(multiplicity(&comp(&[1, 2, 1])), int(8));
    }

    #[test]
    fn multiplicity_sum_vanishes_from_two() {
        // N = 1 is the single composition (1) with multiplicity one; the
        // cancellation starts at N = 2.
        assert_eq!(multiplicity_sum(1).unwrap(), int(1));
        for n in 2..=8 {
            assert_eq!(multiplicity_sum(n).unwrap(), int(0), "N = {n}");
        }
    }

    #[test]
    fn table_order_two_matches_q4_recursion() {
        let t = build_recursion_table(2).unwrap();
        assert_eq!(t.entry(&[], 2).unwrap().coefficient, int(1));
        assert_eq!(t.entry(&[1], 1).unwrap().coefficient, int(-1));
        assert_eq!(t.rhs_scale(), &int(32));
    }

    #[test]
    fn table_order_three_matches_q6_recursion() {
        let t = build_recursion_table(3).unwrap();
        assert_eq!(t.entry(&[], 3).unwrap().coefficient, int(1));
        assert_eq!(t.entry(&[1], 2).unwrap().coefficient, int(-2));
        assert_eq!(t.entry(&[2], 1).unwrap().coefficient, int(2));
        assert_eq!(t.entry(&[1, 1], 1).unwrap().coefficient, int(-3));
        assert_eq!(t.rhs_scale(), &int(-768));
    }

    #[test]
    fn table_order_four_matches_q8_recursion() {
        let t = build_recursion_table(4).unwrap();
        let expect: [(&[u32], u32, i64); 8] = [
            (&[], 4, 1),
            (&[1], 3, -3),
            (&[3], 1, -3),
            (&[2], 2, 9),
            (&[1, 2], 1, 8),
            (&[1, 1], 2, -12),
            (&[2, 1], 1, 12),
            (&[1, 1, 1], 1, -18),
        ];
        for (word, a, c) in expect {
            assert_eq!(
                t.entry(word, a).unwrap().coefficient,
                int(c),
                "word {word:?}, a = {a}"
            );
        }
        assert_eq!(t.entries().len(), 8);
        assert_eq!(t.rhs_scale(), &int(36864));
    }
}
