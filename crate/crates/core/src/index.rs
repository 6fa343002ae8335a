//! Companion tuples, sub-determination masks and the mixed-radix numbering
//! of composite vertices.
//!
//! A composite vertex in numerical form is a tuple of zero-based element
//! indices, one per aspect. Its numerical representation is the 1-based
//! index `1 + sum(W(i) * v[i])`, where the position weights `W` are the
//! running products of the aspect sizes. Zero entries of a sub-determined
//! companion tuple mark dropped aspects and are skipped both when weighting
//! and when encoding.

use std::fmt;

use crate::error::{MagError, Result};
use crate::model::CompositeVertex;

/// Per-aspect cardinalities of a MAG, in aspect order.
///
/// A full tuple has every entry `>= 1`. A sub-determined tuple carries `0`
/// at the aspects dropped by the sub-determination.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CompanionTuple(Vec<usize>);

impl CompanionTuple {
    pub fn new(sizes: Vec<usize>) -> Self {
        CompanionTuple(sizes)
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    /// Number of aspects, including dropped ones.
    pub fn order(&self) -> usize {
        self.0.len()
    }

    /// True when no aspect is dropped.
    pub fn is_full(&self) -> bool {
        self.0.iter().all(|&t| t != 0)
    }

    /// Number of aspects that are kept (nonzero entries).
    pub fn kept_order(&self) -> usize {
        self.0.iter().filter(|&&t| t != 0).count()
    }

    /// The tuple restricted to its nonzero entries.
    pub fn restricted(&self) -> CompanionTuple {
        CompanionTuple(self.0.iter().copied().filter(|&t| t != 0).collect())
    }

    /// Number of (sub-determined) composite vertices: the product of the
    /// nonzero entries.
    pub fn vertex_count(&self) -> usize {
        self.0.iter().filter(|&&t| t != 0).product()
    }

    /// Sub-determined companion tuple: entry `i` is kept when bit `i` of
    /// `zeta` is set and zeroed otherwise.
    pub fn sub_determined(&self, zeta: SubDetermination) -> Result<CompanionTuple> {
        zeta.check_order(self.order())?;
        Ok(CompanionTuple(
            self.0
                .iter()
                .enumerate()
                .map(|(i, &t)| if zeta.keeps(i) { t } else { 0 })
                .collect(),
        ))
    }

    /// Weight of 1-based tuple position `i` (valid for `1..=order()+1`).
    /// `weight(order()+1)` equals [`vertex_count`](Self::vertex_count).
    pub fn weight(&self, i: usize) -> usize {
        assert!(
            i >= 1 && i <= self.order() + 1,
            "position {i} outside 1..={}",
            self.order() + 1
        );
        self.0[..i - 1].iter().filter(|&&t| t != 0).product()
    }

    /// 1-based numerical representation of `v`.
    ///
    /// `v` is either a full tuple (`order()` entries; entries at dropped
    /// aspects are ignored) or a tuple over the kept aspects only
    /// (`kept_order()` entries).
    pub fn index_of(&self, v: &[usize]) -> Result<usize> {
        let mut d = 0usize;
        let mut w = 1usize;
        let out_of_range = || MagError::TupleOutOfRange {
            tuple: v.to_vec(),
            tau: self.0.clone(),
        };
        if v.len() == self.order() {
            for (&x, &t) in v.iter().zip(&self.0) {
                if t != 0 {
                    if x >= t {
                        return Err(out_of_range());
                    }
                    d += x * w;
                    w *= t;
                }
            }
        } else if v.len() == self.kept_order() {
            for (&x, &t) in v.iter().zip(self.0.iter().filter(|&&t| t != 0)) {
                if x >= t {
                    return Err(out_of_range());
                }
                d += x * w;
                w *= t;
            }
        } else {
            return Err(out_of_range());
        }
        Ok(d + 1)
    }

    /// Inverse of [`index_of`](Self::index_of). For a sub-determined tuple the
    /// result ranges over the kept aspects only.
    pub fn vertex_at(&self, d: usize) -> Result<CompositeVertex> {
        let n = self.vertex_count();
        if d == 0 || d > n {
            return Err(MagError::IndexOutOfRange { index: d, max: n });
        }
        let mut rest = d - 1;
        let mut out = Vec::with_capacity(self.kept_order());
        for &t in self.0.iter().filter(|&&t| t != 0) {
            out.push(rest % t);
            rest /= t;
        }
        Ok(CompositeVertex::new(out))
    }
}

impl fmt::Display for CompanionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, ")")
    }
}

/// A proper, nonempty aspect sublist encoded as a bit mask.
///
/// Bit 0 (least significant) stands for the first aspect. Valid masks for a
/// MAG of order `p` lie in `1..=2^p - 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SubDetermination {
    mask: u64,
    order: usize,
}

impl SubDetermination {
    pub fn new(mask: u64, order: usize) -> Result<Self> {
        let zeta = SubDetermination { mask, order };
        if order == 0 || order > 63 || mask == 0 || mask >= (1u64 << order) - 1 {
            return Err(MagError::InvalidZeta { mask, order });
        }
        Ok(zeta)
    }

    /// Parses a binary string whose rightmost character is the first aspect,
    /// e.g. `"011"` keeps aspects 1 and 2 of an order-3 MAG.
    pub fn parse(s: &str, order: usize) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_suffix("_2").unwrap_or(s);
        if s.is_empty() || s.len() != order || !s.bytes().all(|b| b == b'0' || b == b'1') {
            return Err(MagError::ZetaSyntax(s.to_string()));
        }
        let mask = u64::from_str_radix(s, 2).map_err(|_| MagError::ZetaSyntax(s.to_string()))?;
        Self::new(mask, order)
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Whether zero-based aspect `i` is kept.
    pub fn keeps(&self, i: usize) -> bool {
        self.mask >> i & 1 == 1
    }

    /// Zero-based positions of the kept aspects, ascending.
    pub fn kept(&self) -> Vec<usize> {
        (0..self.order).filter(|&i| self.keeps(i)).collect()
    }

    /// Number of kept aspects.
    pub fn kept_order(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub(crate) fn check_order(&self, order: usize) -> Result<()> {
        if self.order != order {
            return Err(MagError::InvalidZeta {
                mask: self.mask,
                order,
            });
        }
        Ok(())
    }
}

impl fmt::Display for SubDetermination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:0width$b}", self.mask, width = self.order)
    }
}
