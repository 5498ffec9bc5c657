//! Face counts of erosohedra.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Face counts of the erosohedron on `m` vertices, a polytope of dimension `m - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ErosohedronCounts {
    pub vertices: BigUint,
    /// `faces_by_dim[k]` counts the `k`-dimensional faces, `k = 0..m-1`.
    pub faces_by_dim: Vec<BigUint>,
    pub total: BigUint,
}

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Closed formulas for `m >= 2`: `(m - 1) m` vertices, `(m - k) C(m, k + 1)`
/// faces of dimension `k >= 1`, and `2^(m-1) (m + 2) - 2m - 1` faces in total.
pub fn erosohedron_counts(m: u32) -> ErosohedronCounts {
    assert!(m >= 2, "erosohedra need at least two vertices");
    let m64 = u64::from(m);
    let vertices = BigUint::from((m64 - 1) * m64);
    let mut faces_by_dim = vec![vertices.clone()];
    for k in 1..m64 {
        faces_by_dim.push(BigUint::from(m64 - k) * binomial(m64, k + 1));
    }
    let total = (BigUint::one() << (m - 1)) * BigUint::from(m64 + 2) - BigUint::from(2 * m64 + 1);
    ErosohedronCounts { vertices, faces_by_dim, total }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hexagon() {
        let c = erosohedron_counts(3);
        assert_eq!(c.faces_by_dim, [6u32, 6, 1].map(BigUint::from).to_vec());
        assert_eq!(c.total, BigUint::from(13u32));
        assert_eq!(erosohedron_counts(4).total, BigUint::from(39u32));
    }

    #[test]
    fn total_is_the_sum() {
        for m in 2..=12 {
            let c = erosohedron_counts(m);
            let sum: BigUint = c.faces_by_dim.iter().sum();
            assert_eq!(sum, c.total, "m = {m}");
        }
    }
}
