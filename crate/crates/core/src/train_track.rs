//! Incidence matrices of the invariant train tracks and prong data.
//!
//! Matrices follow the column convention: entry `(i, j)` counts how many
//! times the image of edge `j` crosses edge `i`.

use std::fmt;

use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::dilatation::family_polynomial;
use crate::linalg::IntMatrix;
use crate::{Error, Result};

/// The 6×6 incidence matrix of `w_6` on the real edges `p_1, …, p_6`.
pub const W6_MATRIX: [[i64; 6]; 6] = [
    [2, 0, 0, 0, 0, 1],
    [2, 0, 0, 2, 1, 0],
    [1, 0, 1, 1, 1, 0],
    [0, 0, 2, 1, 2, 0],
    [1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0],
];

/// Images of the top edges `p_1^{(n+1)}, …, p_6^{(n+1)}` on the bottom
/// edges `q_1, q_2, q_3` (rows) per top edge (columns).
pub const TOP_TO_BOTTOM: [[i64; 6]; 3] =
    [[0, 0, 0, 0, 0, 1], [0, 0, 0, 2, 1, 0], [0, 0, 1, 1, 1, 0]];

/// Images of the top edges on the first level `p_1^{(1)}, …, p_6^{(1)}`.
///
/// Pushing the bottom part through `q_1 ↦ p_1`, `q_2 ↦ p_2`,
/// `q_3 ↦ p_3 + p_4` and adding this block gives back [`W6_MATRIX`].
pub const TOP_TO_FIRST: [[i64; 6]; 6] = [
    [2, 0, 0, 0, 0, 0],
    [2, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 1, 0],
    [1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0],
];

pub fn w6_incidence_matrix() -> IntMatrix {
    IntMatrix::from_rows(&W6_MATRIX).expect("constant matrix is rectangular")
}

/// A real edge of the train track `τ_{4n+8}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeLabel {
    /// Bottom edge `q_i`, `1 ≤ i ≤ 3`.
    Q(usize),
    /// `p_base^{(level)}`, `1 ≤ base ≤ 6`, `1 ≤ level ≤ n+1`.
    P { base: usize, level: usize },
}

impl EdgeLabel {
    /// Position in the edge order `q_1, q_2, q_3, p^{(1)}_1..6, …, p^{(n+1)}_1..6`.
    pub fn position(self) -> usize {
        match self {
            EdgeLabel::Q(i) => i - 1,
            EdgeLabel::P { base, level } => 3 + 6 * (level - 1) + (base - 1),
        }
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeLabel::Q(i) => write!(f, "q{i}"),
            EdgeLabel::P { base, level } => write!(f, "p{base}^({level})"),
        }
    }
}

/// Edge images of `τ_{4n+8}` under `w_{4n+8}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionMap {
    pub n: usize,
    pub edges: Vec<EdgeLabel>,
    /// `images[k]` lists `(edge, multiplicity)` crossed by the image of `edges[k]`.
    pub images: Vec<Vec<(EdgeLabel, u32)>>,
}

impl TransitionMap {
    pub fn dim(&self) -> usize {
        self.edges.len()
    }

    pub fn to_matrix(&self) -> IntMatrix {
        let d = self.dim();
        let mut m = IntMatrix::zeros(d, d);
        for (col, image) in self.images.iter().enumerate() {
            for &(e, count) in image {
                m.add_to(e.position(), col, count);
            }
        }
        m
    }
}

pub fn edge_order(n: usize) -> Vec<EdgeLabel> {
    let mut edges: Vec<EdgeLabel> = (1..=3).map(EdgeLabel::Q).collect();
    for level in 1..=n + 1 {
        edges.extend((1..=6).map(|base| EdgeLabel::P { base, level }));
    }
    edges
}

pub fn family_transition_map(n: usize) -> TransitionMap {
    let edges = edge_order(n);
    let p = |base, level| EdgeLabel::P { base, level };
    let images = edges
        .iter()
        .map(|&e| match e {
            EdgeLabel::Q(1) => vec![(p(1, 1), 1)],
            EdgeLabel::Q(2) => vec![(p(2, 1), 1)],
            EdgeLabel::Q(_) => vec![(p(3, 1), 1), (p(4, 1), 1)],
            EdgeLabel::P { base, level } if level <= n => vec![(p(base, level + 1), 1)],
            EdgeLabel::P { base, .. } => {
                let c = base - 1;
                let mut img = Vec::new();
                for (r, row) in TOP_TO_BOTTOM.iter().enumerate() {
                    if row[c] > 0 {
                        img.push((EdgeLabel::Q(r + 1), row[c] as u32));
                    }
                }
                for (r, row) in TOP_TO_FIRST.iter().enumerate() {
                    if row[c] > 0 {
                        img.push((p(r + 1, 1), row[c] as u32));
                    }
                }
                img
            }
        })
        .collect();
    TransitionMap { n, edges, images }
}

/// The `(6n+9) × (6n+9)` incidence matrix of `w_{4n+8}`.
pub fn family_incidence_matrix(n: usize) -> IntMatrix {
    family_transition_map(n).to_matrix()
}

/// Singularity data of the invariant foliation on the punctured sphere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProngData {
    /// Prong count at each puncture `c_1, c_2, …`.
    pub punctures: Vec<usize>,
    /// Prong count at each interior singularity.
    pub interior: Vec<usize>,
}

impl ProngData {
    /// Fills in 3-pronged interior singularities so that the
    /// Euler–Poincaré sum is 4.
    fn with_three_prongs(punctures: Vec<usize>) -> Result<Self> {
        let boundary: i64 = punctures.iter().map(|&p| 2 - p as i64).sum();
        let count = boundary - 4;
        if count < 0 {
            return Err(Error::domain(
                "puncture data leaves no room for interior singularities",
            ));
        }
        Ok(ProngData {
            punctures,
            interior: vec![3; count as usize],
        })
    }

    /// `Σ (2 - prongs)` over all singularities; 4 on the sphere.
    pub fn euler_poincare_sum(&self) -> i64 {
        self.punctures
            .iter()
            .chain(&self.interior)
            .map(|&p| 2 - p as i64)
            .sum()
    }

    pub fn interior_three_prongs(&self) -> usize {
        self.interior.iter().filter(|&&p| p == 3).count()
    }
}

/// Prong data for `w_{4n+8}`.
pub fn prong_data(n: usize) -> ProngData {
    let mut punctures = vec![1; 4 * n + 6];
    punctures.push(n + 2);
    punctures.push(n + 1);
    ProngData::with_three_prongs(punctures).expect("family data is consistent")
}

/// Prong data for `w_6`: one prong at each of the six punctures.
pub fn w6_prong_data() -> ProngData {
    ProngData::with_three_prongs(vec![1; 6]).expect("w6 data is consistent")
}

/// Certification of one family member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyCheck {
    pub n: usize,
    pub dim: usize,
    pub char_poly_matches: bool,
    pub primitive: bool,
    pub witness: Option<usize>,
}

impl FamilyCheck {
    pub fn passed(&self) -> bool {
        self.char_poly_matches && self.primitive
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyReport {
    pub checks: Vec<FamilyCheck>,
}

impl FamilyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(FamilyCheck::passed)
    }
}

/// Compares a candidate matrix for parameter `n` with the closed form.
pub fn check_family_matrix(n: usize, m: &IntMatrix) -> Result<FamilyCheck> {
    let char_poly_matches = m.char_poly()? == family_polynomial(n);
    let prim = m.is_primitive()?;
    Ok(FamilyCheck {
        n,
        dim: m.rows(),
        char_poly_matches,
        primitive: prim.primitive,
        witness: prim.witness,
    })
}

/// Checks `char_poly = family_polynomial(n)` and primitivity for `n ≤ n_max`.
pub fn validate_family(n_max: usize) -> Result<FamilyReport> {
    let checks = (0..=n_max)
        .into_par_iter()
        .map(|n| check_family_matrix(n, &family_incidence_matrix(n)))
        .collect::<Result<Vec<_>>>()?;
    Ok(FamilyReport { checks })
}

/// Column sums as machine integers.
pub fn column_sums(m: &IntMatrix) -> Vec<i64> {
    (0..m.cols())
        .map(|j| {
            m.column(j)
                .iter()
                .map(|x| x.to_i64().expect("small entry"))
                .sum()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::IntPoly;
    use num_bigint::BigInt;

    #[test]
    fn w6_matrix_facts() {
        let m = w6_incidence_matrix();
        let col3: Vec<BigInt> = [0, 0, 1, 2, 0, 0]
            .iter()
            .map(|&x| BigInt::from(x))
            .collect();
        assert_eq!(m.column(2), col3);
        let expected = &(&IntPoly::from_i64(&[-1, 1]) * &IntPoly::from_i64(&[-1, 1]))
            * &IntPoly::from_i64(&[1, -2, -2, -2, 1]);
        assert_eq!(m.char_poly().unwrap(), expected);
        assert_eq!(m.is_primitive().unwrap().witness, Some(5));
    }

    #[test]
    fn top_blocks_fold_back_to_w6() {
        let bottom_to_first = [
            [1, 0, 0],
            [0, 1, 0],
            [0, 0, 1],
            [0, 0, 1],
            [0, 0, 0],
            [0, 0, 0],
        ];
        for r in 0..6 {
            for c in 0..6 {
                let pushed: i64 = (0..3)
                    .map(|k| bottom_to_first[r][k] * TOP_TO_BOTTOM[k][c])
                    .sum();
                assert_eq!(TOP_TO_FIRST[r][c] + pushed, W6_MATRIX[r][c]);
            }
        }
    }

    #[test]
    fn family_dimensions_and_columns() {
        for n in 0..4 {
            let m = family_incidence_matrix(n);
            assert_eq!(m.rows(), 6 * n + 9);
            let sums = column_sums(&m);
            assert_eq!(&sums[..3], &[1, 1, 2]);
            assert!(sums[3..3 + 6 * n].iter().all(|&s| s == 1));
            let q3 = m.column(2);
            let ones: Vec<usize> = (0..q3.len())
                .filter(|&i| q3[i] == BigInt::from(1))
                .collect();
            assert_eq!(
                ones,
                vec![
                    EdgeLabel::P { base: 3, level: 1 }.position(),
                    EdgeLabel::P { base: 4, level: 1 }.position()
                ]
            );
        }
        assert_eq!(family_incidence_matrix(2).rows(), 21);
    }

    #[test]
    fn family_n0_char_poly() {
        let m = family_incidence_matrix(0);
        assert_eq!(
            m.char_poly().unwrap(),
            IntPoly::from_i64(&[1, -2, -2, 3, 0, 0, 3, -2, -2, 1])
        );
    }

    #[test]
    fn validation_passes_small_n() {
        let report = validate_family(4).unwrap();
        assert!(report.all_passed(), "{report:?}");
    }

    #[test]
    fn perturbed_matrix_fails() {
        let mut m = family_incidence_matrix(1);
        m.add_to(0, 0, 1);
        let check = check_family_matrix(1, &m).unwrap();
        assert!(!check.char_poly_matches);
        assert!(!check.passed());
    }

    #[test]
    fn prongs() {
        let w6 = w6_prong_data();
        assert_eq!(w6.punctures, vec![1; 6]);
        assert_eq!(w6.interior, vec![3, 3]);
        assert_eq!(w6.euler_poincare_sum(), 4);
        for n in 0..10 {
            let d = prong_data(n);
            assert_eq!(d.punctures.len(), 4 * n + 8);
            assert_eq!(d.punctures[4 * n + 6], n + 2);
            assert_eq!(d.punctures[4 * n + 7], n + 1);
            assert_eq!(d.interior_three_prongs(), 2 * n + 3);
            assert_eq!(d.euler_poincare_sum(), 4);
        }
    }

    #[test]
    fn edge_labels() {
        let order = edge_order(1);
        assert_eq!(order.len(), 15);
        for (k, e) in order.iter().enumerate() {
            assert_eq!(e.position(), k);
        }
        assert_eq!(order[3].to_string(), "p1^(1)");
        assert_eq!(order[2].to_string(), "q3");
    }
}
