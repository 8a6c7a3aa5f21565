//! The presentation of the hyperelliptic handlebody group `ℋ(ℍ_g)`.
//!
//! Generators `r_1..r_g`, `s_1..s_g`, `t_1..t_{g+1}` map to the wicket
//! generators of the same names on `2g + 2` strands, which lets every
//! relation be checked as an identity of braids.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::artin::braids_equal;
use crate::braid::{full_twist_power, wicket_word, BraidWord, WicketKind, WicketLetter};
use crate::linalg::{smith_normal_form, IntMatrix};
use crate::{Error, Result};

/// A generator to an integer power.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Syllable {
    /// 0-based generator index.
    pub generator: usize,
    pub exponent: i32,
}

/// `lhs = rhs`, tagged with the relation family it belongs to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    /// Family number `1..=10`; 0 for ad hoc presentations.
    pub family: u8,
    pub lhs: Vec<Syllable>,
    pub rhs: Vec<Syllable>,
}

impl Relation {
    /// The relator `lhs · rhs^{-1}`.
    pub fn relator(&self) -> Vec<Syllable> {
        let mut w = self.lhs.clone();
        w.extend(self.rhs.iter().rev().map(|s| Syllable {
            generator: s.generator,
            exponent: -s.exponent,
        }));
        w
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relations: Vec<Relation>,
    /// Genus, for presentations of `ℋ(ℍ_g)`.
    pub genus: Option<usize>,
}

impl Presentation {
    /// An ad hoc presentation; relators are given as words equal to 1.
    pub fn new(generators: Vec<String>, relators: Vec<Vec<Syllable>>) -> Result<Self> {
        for r in &relators {
            if let Some(s) = r.iter().find(|s| s.generator >= generators.len()) {
                return Err(Error::out_of_range(
                    "generator",
                    s.generator as i64,
                    format!("[0, {})", generators.len()),
                ));
            }
        }
        Ok(Presentation {
            generators,
            relations: relators
                .into_iter()
                .map(|lhs| Relation {
                    family: 0,
                    lhs,
                    rhs: Vec::new(),
                })
                .collect(),
            genus: None,
        })
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn render_word(&self, w: &[Syllable]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter()
            .map(|s| match s.exponent {
                1 => self.generators[s.generator].clone(),
                e => format!("{}^{e}", self.generators[s.generator]),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn render_relation(&self, r: &Relation) -> String {
        format!(
            "{} = {}",
            self.render_word(&r.lhs),
            self.render_word(&r.rhs)
        )
    }

    /// Rows are abelianized relators, columns generators.
    pub fn relation_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.relations.len(), self.generators.len());
        for (i, r) in self.relations.iter().enumerate() {
            for s in r.relator() {
                m.add_to(i, s.generator, s.exponent);
            }
        }
        m
    }

    /// Same group, generators renamed by `perm` (`new index = perm[old]`)
    /// and relations reordered by `order`.
    pub fn permuted(&self, perm: &[usize], order: &[usize]) -> Presentation {
        let mut generators = vec![String::new(); self.generators.len()];
        for (old, name) in self.generators.iter().enumerate() {
            generators[perm[old]] = name.clone();
        }
        let map = |w: &[Syllable]| {
            w.iter()
                .map(|s| Syllable {
                    generator: perm[s.generator],
                    exponent: s.exponent,
                })
                .collect()
        };
        Presentation {
            generators,
            relations: order
                .iter()
                .map(|&k| {
                    let r = &self.relations[k];
                    Relation {
                        family: r.family,
                        lhs: map(&r.lhs),
                        rhs: map(&r.rhs),
                    }
                })
                .collect(),
            genus: self.genus,
        }
    }
}

impl fmt::Display for Presentation {
    /// Relations grouped by family.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "generators: {}", self.generators.join(", "))?;
        let mut current = None;
        for r in &self.relations {
            if current != Some(r.family) {
                writeln!(f, "({})", r.family)?;
                current = Some(r.family);
            }
            writeln!(f, "  {}", self.render_relation(r))?;
        }
        Ok(())
    }
}

struct Builder {
    g: usize,
    relations: Vec<Relation>,
}

impl Builder {
    fn r(&self, i: usize) -> Syllable {
        Syllable {
            generator: i - 1,
            exponent: 1,
        }
    }

    fn s(&self, i: usize) -> Syllable {
        Syllable {
            generator: self.g + i - 1,
            exponent: 1,
        }
    }

    fn t(&self, j: usize) -> Syllable {
        Syllable {
            generator: 2 * self.g + j - 1,
            exponent: 1,
        }
    }

    fn push(&mut self, family: u8, lhs: Vec<Syllable>, rhs: Vec<Syllable>) {
        self.relations.push(Relation { family, lhs, rhs });
    }
}

fn inv(s: Syllable) -> Syllable {
    Syllable {
        generator: s.generator,
        exponent: -s.exponent,
    }
}

/// The word `θ = t_1 s_1 ⋯ s_g r_g^{-1} ⋯ r_1^{-1} t_1`.
fn theta(b: &Builder) -> Vec<Syllable> {
    let g = b.g;
    let mut w = vec![b.t(1)];
    w.extend((1..=g).map(|i| b.s(i)));
    w.extend((1..=g).rev().map(|i| inv(b.r(i))));
    w.push(b.t(1));
    w
}

pub fn handlebody_presentation(g: usize) -> Result<Presentation> {
    if g < 2 {
        return Err(Error::domain(format!("genus must be at least 2, got {g}")));
    }
    let mut generators = Vec::with_capacity(3 * g + 1);
    generators.extend((1..=g).map(|i| format!("r{i}")));
    generators.extend((1..=g).map(|i| format!("s{i}")));
    generators.extend((1..=g + 1).map(|j| format!("t{j}")));
    let mut b = Builder {
        g,
        relations: Vec::new(),
    };

    // (1), (2): far commutation and braid relations among r's and s's.
    for (family, pick) in [
        (1u8, Builder::r as fn(&Builder, usize) -> Syllable),
        (2, Builder::s),
    ] {
        for i in 1..=g {
            for j in i + 2..=g {
                let (x, y) = (pick(&b, i), pick(&b, j));
                b.push(family, vec![x, y], vec![y, x]);
            }
        }
        for i in 1..g {
            let (x, y) = (pick(&b, i), pick(&b, i + 1));
            b.push(family, vec![x, y, x], vec![y, x, y]);
        }
    }
    // (3)
    for i in 1..=g {
        for j in 1..=g {
            if i.abs_diff(j) > 1 {
                let (x, y) = (b.r(i), b.s(j));
                b.push(3, vec![x, y], vec![y, x]);
            }
        }
    }
    // (4)
    for i in 1..g {
        let (ri, rj, si, sj) = (b.r(i), b.r(i + 1), b.s(i), b.s(i + 1));
        b.push(4, vec![ri, sj, si], vec![sj, si, rj]);
        b.push(4, vec![ri, rj, si], vec![sj, ri, rj]);
        b.push(4, vec![si, sj, ri], vec![rj, si, sj]);
    }
    // (5)
    for i in 1..=g {
        let (r, s, t) = (b.r(i), b.s(i), b.t(i));
        b.push(5, vec![r, s, t, r], vec![t, s]);
    }
    // (6)
    for i in 1..=g + 1 {
        for j in i + 1..=g + 1 {
            let (x, y) = (b.t(i), b.t(j));
            b.push(6, vec![x, y], vec![y, x]);
        }
    }
    // (7), (8)
    for (family, pick) in [
        (7u8, Builder::r as fn(&Builder, usize) -> Syllable),
        (8, Builder::s),
    ] {
        for i in 1..=g {
            let x = pick(&b, i);
            for j in 1..=g + 1 {
                if j != i && j != i + 1 {
                    let t = b.t(j);
                    b.push(family, vec![x, t], vec![t, x]);
                }
            }
            let (ti, tj) = (b.t(i), b.t(i + 1));
            if family == 7 {
                b.push(7, vec![tj, x], vec![x, ti]);
            } else {
                b.push(8, vec![ti, x], vec![x, tj]);
                b.push(8, vec![tj, x], vec![x, ti]);
            }
        }
    }
    // (9)
    let mut unit: Vec<Syllable> = (1..=g).rev().map(|i| b.s(i)).collect();
    unit.extend([b.t(1), b.t(1)]);
    let lhs9: Vec<Syllable> = (0..=g).flat_map(|_| unit.clone()).collect();
    b.push(9, lhs9, Vec::new());
    // (10)
    let th = theta(&b);
    b.push(10, [th.clone(), th.clone()].concat(), Vec::new());
    for k in 0..3 * g + 1 {
        let x = Syllable {
            generator: k,
            exponent: 1,
        };
        let mut lhs = th.clone();
        lhs.push(x);
        let mut rhs = vec![x];
        rhs.extend(th.iter().copied());
        b.push(10, lhs, rhs);
    }

    Ok(Presentation {
        generators,
        relations: b.relations,
        genus: Some(g),
    })
}

/// `Z^free_rank ⊕ Z/d_1 ⊕ ⋯`, unit factors dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            k => parts.push(format!("Z^{k}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

pub fn abelianization(p: &Presentation) -> AbelianGroup {
    let snf = smith_normal_form(&p.relation_matrix());
    AbelianGroup {
        free_rank: snf.free_rank,
        torsion: snf.torsion(),
    }
}

/// Identifications read off single abelianized relators, before any
/// Smith normal form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AbelianIdentities {
    /// Family (4) contains `r_i - r_{i+1}` for every `i`.
    pub r_equal: bool,
    /// Family (4) contains `s_i - s_{i+1}` for every `i`.
    pub s_equal: bool,
    /// Families (7), (8) contain `t_{i+1} - t_i` for every `i`.
    pub t_equal: bool,
    /// Family (5) contains `2 r_i` for every `i`.
    pub two_r_zero: bool,
}

impl AbelianIdentities {
    pub fn all(&self) -> bool {
        self.r_equal && self.s_equal && self.t_equal && self.two_r_zero
    }
}

pub fn abelian_identities(p: &Presentation) -> Result<AbelianIdentities> {
    let g = p
        .genus
        .ok_or_else(|| Error::domain("abelian identities need a handlebody presentation"))?;
    let width = p.generator_count();
    let rows_of = |families: &[u8]| -> Vec<Vec<i64>> {
        p.relations
            .iter()
            .filter(|r| families.contains(&r.family))
            .map(|r| {
                let mut v = vec![0i64; width];
                for s in r.relator() {
                    v[s.generator] += s.exponent as i64;
                }
                v
            })
            .collect()
    };
    let has = |rows: &[Vec<i64>], target: &[(usize, i64)]| {
        let mut v = vec![0i64; width];
        for &(k, c) in target {
            v[k] += c;
        }
        let neg: Vec<i64> = v.iter().map(|x| -x).collect();
        rows.iter().any(|r| *r == v || *r == neg)
    };
    let f4 = rows_of(&[4]);
    let f5 = rows_of(&[5]);
    let f78 = rows_of(&[7, 8]);
    let (r, s, t) = (
        |i: usize| i - 1,
        |i: usize| g + i - 1,
        |j: usize| 2 * g + j - 1,
    );
    Ok(AbelianIdentities {
        r_equal: (1..g).all(|i| has(&f4, &[(r(i), 1), (r(i + 1), -1)])),
        s_equal: (1..g).all(|i| has(&f4, &[(s(i), 1), (s(i + 1), -1)])),
        t_equal: (1..=g).all(|i| has(&f78, &[(t(i + 1), 1), (t(i), -1)])),
        two_r_zero: (1..=g).all(|i| has(&f5, &[(r(i), 2)])),
    })
}

/// Outcome of checking one relation as a braid identity on `2g + 2` strands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationStatus {
    /// Both sides are equal in the disk braid group.
    HoldsInBraidGroup,
    /// The relator equals `Δ^{2k}` in the disk braid group.
    HoldsUpToFullTwist {
        power: i64,
    },
    /// The relator is a pure braid whose exponent sum vanishes modulo
    /// `2(m - 1)`, as it must in the spherical braid group; the disk oracle
    /// cannot decide more.
    HoldsModuloInvariants,
    Fails,
    ResourceCapped,
}

impl RelationStatus {
    pub fn name(self) -> &'static str {
        match self {
            RelationStatus::HoldsInBraidGroup => "holds_in_braid_group",
            RelationStatus::HoldsUpToFullTwist { .. } => "holds_up_to_full_twist",
            RelationStatus::HoldsModuloInvariants => "holds_modulo_invariants",
            RelationStatus::Fails => "fails",
            RelationStatus::ResourceCapped => "resource_capped",
        }
    }

    /// Holds at least modulo the necessary spherical invariants.
    pub fn acceptable(self) -> bool {
        !matches!(self, RelationStatus::Fails | RelationStatus::ResourceCapped)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub family: u8,
    pub relation: String,
    pub status: RelationStatus,
    /// Permutation of the relator braid is trivial.
    pub pure: bool,
    pub exponent_sum: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationReport {
    pub genus: usize,
    pub strands: usize,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn partial(&self) -> bool {
        self.checks
            .iter()
            .any(|c| c.status == RelationStatus::ResourceCapped)
    }

    /// Families (1)–(8) all hold in the disk braid group.
    pub fn disk_relations_hold(&self) -> bool {
        self.checks
            .iter()
            .filter(|c| c.family <= 8)
            .all(|c| c.status == RelationStatus::HoldsInBraidGroup)
    }

    pub fn all_acceptable(&self) -> bool {
        self.checks.iter().all(|c| c.status.acceptable())
    }
}

fn to_braid(p: &Presentation, w: &[Syllable], strands: usize) -> Result<BraidWord> {
    let g = p.genus.unwrap();
    let mut letters = Vec::new();
    for s in w {
        let (kind, index) = if s.generator < g {
            (WicketKind::R, s.generator + 1)
        } else if s.generator < 2 * g {
            (WicketKind::S, s.generator - g + 1)
        } else {
            (WicketKind::T, s.generator - 2 * g + 1)
        };
        for _ in 0..s.exponent.unsigned_abs() {
            letters.push(WicketLetter {
                kind,
                index,
                inverse: s.exponent < 0,
            });
        }
    }
    wicket_word(&letters, strands)
}

fn cap<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::ResourceLimit(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

fn check_relation(p: &Presentation, rel: &Relation, strands: usize) -> Result<RelationCheck> {
    let lhs = to_braid(p, &rel.lhs, strands)?;
    let rhs = to_braid(p, &rel.rhs, strands)?;
    let relator = lhs.compose(&rhs.inverse())?;
    let pure = relator.permutation().is_identity();
    let exponent_sum = relator.exponent_sum();
    let mut status = match cap(braids_equal(&lhs, &rhs))? {
        None => RelationStatus::ResourceCapped,
        Some(true) => RelationStatus::HoldsInBraidGroup,
        Some(false) => RelationStatus::Fails,
    };
    if rel.family >= 9 && status == RelationStatus::Fails && pure {
        let m = strands as i64;
        let twist = m * (m - 1);
        if exponent_sum % twist == 0 && exponent_sum != 0 {
            // Try both global signs of the full twist.
            let k = exponent_sum / twist;
            let base = full_twist_power(strands, k.unsigned_abs() as usize)?;
            for cand in [base.clone(), base.inverse()] {
                let power = if cand.exponent_sum() == exponent_sum {
                    k
                } else {
                    -k
                };
                if cap(braids_equal(&relator, &cand))? == Some(true) {
                    status = RelationStatus::HoldsUpToFullTwist { power };
                    break;
                }
            }
        }
        if status == RelationStatus::Fails && exponent_sum % (2 * (m - 1)) == 0 {
            status = RelationStatus::HoldsModuloInvariants;
        }
    }
    Ok(RelationCheck {
        family: rel.family,
        relation: p.render_relation(rel),
        status,
        pure,
        exponent_sum,
    })
}

/// Checks every relation of `handlebody_presentation(g)` on `2g + 2`
/// strands. Genus above `max_genus` is refused.
pub fn verify_relations(g: usize, max_genus: usize) -> Result<RelationReport> {
    if g > max_genus {
        return Err(Error::ResourceLimit(format!(
            "genus {g} exceeds the verification cap {max_genus}"
        )));
    }
    let p = handlebody_presentation(g)?;
    let strands = 2 * g + 2;
    let checks = p
        .relations
        .par_iter()
        .map(|rel| check_relation(&p, rel, strands))
        .collect::<Result<Vec<_>>>()?;
    Ok(RelationReport {
        genus: g,
        strands,
        checks,
    })
}

/// Default genus cap for [`verify_relations`].
pub const DEFAULT_MAX_GENUS: usize = 4;

/// Torsion as machine integers, for display and tests.
pub fn torsion_u64(a: &AbelianGroup) -> Vec<u64> {
    a.torsion
        .iter()
        .map(|d| d.to_u64().unwrap_or(u64::MAX))
        .collect()
}

/// `⟨a | ⟩`, `⟨a | a^k⟩` and similar one-line presentations.
pub fn cyclic_presentation(order: Option<i32>) -> Presentation {
    let relators = match order {
        Some(k) => vec![vec![Syllable {
            generator: 0,
            exponent: k,
        }]],
        None => Vec::new(),
    };
    Presentation::new(vec!["a".into()], relators).expect("valid generator")
}
