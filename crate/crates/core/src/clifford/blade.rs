//! Basis blades as index bitmasks and the exact sign rules of the geometric
//! product in negative-definite signature (`e_i e_i = -1`).

/// A basis blade `e_{i1} e_{i2} ... e_{ip}` with strictly increasing indices,
/// stored as a bitmask: bit `k` set means `e_{k+1}` participates.
///
/// The empty mask is the scalar blade `1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Blade(pub u32);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    /// Blade for the single basis vector `e_i` (1-based index).
    pub fn basis(i: u32) -> Blade {
        assert!(i >= 1, "basis indices are 1-based");
        Blade(1 << (i - 1))
    }

    /// Grade = number of basis vectors in the blade.
    pub fn grade(self) -> u32 {
        self.0.count_ones()
    }

    /// 1-based indices in increasing order.
    pub fn indices(self) -> Vec<u32> {
        (0..32).filter(|k| self.0 >> k & 1 == 1).map(|k| k + 1).collect()
    }

    /// Largest 1-based index present, or 0 for the scalar blade.
    pub fn max_index(self) -> u32 {
        32 - self.0.leading_zeros()
    }

    pub fn from_indices(indices: &[u32]) -> Blade {
        let mut bits = 0u32;
        for &i in indices {
            assert!(i >= 1 && i <= 32, "index out of range");
            assert!(bits >> (i - 1) & 1 == 0, "repeated index in blade");
            bits |= 1 << (i - 1);
        }
        Blade(bits)
    }
}

/// Number of transpositions (mod 2) needed to merge the sorted index lists of
/// `a` and `b` into a single sorted list: for every index of `a`, count the
/// smaller indices of `b` it has to jump over.
fn reorder_swaps(a: u32, b: u32) -> u32 {
    let mut swaps = 0u32;
    let mut rest = a;
    while rest != 0 {
        let low = rest & rest.wrapping_neg();
        // indices of b strictly below this index of a
        swaps += (b & (low - 1)).count_ones();
        rest ^= low;
    }
    swaps
}

/// Sign and resulting blade of the geometric product `a * b`.
///
/// Sorting contributes `(-1)^swaps`; every index common to both blades
/// contracts through `e_i e_i = -1`.
pub fn blade_product(a: Blade, b: Blade) -> (i64, Blade) {
    let swaps = reorder_swaps(a.0, b.0);
    let contractions = (a.0 & b.0).count_ones();
    let sign = if (swaps + contractions) % 2 == 0 { 1 } else { -1 };
    (sign, Blade(a.0 ^ b.0))
}

/// Sign of the reversal involution on a grade-`p` blade: `(-1)^{p(p-1)/2}`.
pub fn reversal_sign(blade: Blade) -> i64 {
    let p = blade.grade();
    if (p * p.wrapping_sub(1) / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Wedge product sign: zero overlap required; sorting sign only.
pub fn blade_wedge(a: Blade, b: Blade) -> Option<(i64, Blade)> {
    if a.0 & b.0 != 0 {
        return None;
    }
    let swaps = reorder_swaps(a.0, b.0);
    Some((if swaps % 2 == 0 { 1 } else { -1 }, Blade(a.0 | b.0)))
}

/// Contraction of `e_i` (1-based) into a blade: removes the index with the
/// sign `(-1)^{position}`, or `None` when the index is absent.
pub fn blade_contract(i: u32, b: Blade) -> Option<(i64, Blade)> {
    let bit = 1u32 << (i - 1);
    if b.0 & bit == 0 {
        return None;
    }
    let below = (b.0 & (bit - 1)).count_ones();
    Some((if below % 2 == 0 { 1 } else { -1 }, Blade(b.0 & !bit)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_basic_relations() {
        let e1 = Blade::basis(1);
        let e2 = Blade::basis(2);
        // e1 e1 = -1
        assert_eq!(blade_product(e1, e1), (-1, Blade::SCALAR));
        // e1 e2 = e12, e2 e1 = -e12
        assert_eq!(blade_product(e1, e2), (1, Blade(0b11)));
        assert_eq!(blade_product(e2, e1), (-1, Blade(0b11)));
        // (e1 e2)(e1 e2) = -1, by hand: one swap, two contractions
        assert_eq!(blade_product(Blade(0b11), Blade(0b11)), (-1, Blade::SCALAR));
    }

    #[test]
    fn anticommutation_exhaustive_small() {
        for n in 1..=6u32 {
            for i in 1..=n {
                for j in 1..=n {
                    let (si, bi) = blade_product(Blade::basis(i), Blade::basis(j));
                    let (sj, bj) = blade_product(Blade::basis(j), Blade::basis(i));
                    assert_eq!(bi, bj);
                    if i == j {
                        assert_eq!((si, bi), (-1, Blade::SCALAR));
                        assert_eq!(si + sj, -2);
                    } else {
                        assert_eq!(si + sj, 0, "e{} e{} must anticommute", i, j);
                    }
                }
            }
        }
    }

    #[test]
    fn reversal_signs() {
        assert_eq!(reversal_sign(Blade::SCALAR), 1);
        assert_eq!(reversal_sign(Blade::basis(3)), 1);
        // (e1 e2)* = e2 e1 = -e1 e2
        assert_eq!(reversal_sign(Blade(0b11)), -1);
        // (e1 e2 e3)* needs three transpositions
        assert_eq!(reversal_sign(Blade(0b111)), -1);
        assert_eq!(reversal_sign(Blade(0b1111)), 1);
    }

    #[test]
    fn contraction_positions() {
        let b123 = Blade::from_indices(&[1, 2, 3]);
        assert_eq!(blade_contract(1, b123), Some((1, Blade(0b110))));
        assert_eq!(blade_contract(2, b123), Some((-1, Blade(0b101))));
        assert_eq!(blade_contract(3, b123), Some((1, Blade(0b011))));
        assert_eq!(blade_contract(4, b123), None);
    }
}
