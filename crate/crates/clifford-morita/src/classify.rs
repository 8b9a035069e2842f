//! Classification of Clifford superalgebras up to graded Morita equivalence:
//! closed-form class arithmetic (mod 8 real, mod 2 complex), realization of
//! the basic representatives, identification of computed basic algebras by
//! bounded generator-image search, and the independent brute-force oracle.

use serde::Serialize;

use crate::algebra::{
    clifford_complex, clifford_real, grassmann_real, is_isomorphic_via, Element, SuperAlgebra,
};
use crate::error::{Error, Result};
use crate::linalg::RowSpan;
use crate::modules::Twist;
use crate::morita::{basic_reduction, quotient_by_radical};
use crate::scalar::{ExactScalar, GaussRat, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RealCore {
    Triv,
    DPlus(u8),
    Quat,
    DMinus(u8),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RealClass {
    pub core: RealCore,
    pub grassmann_rank: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ComplexCore {
    TrivC,
    DOdd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexClass {
    pub core: ComplexCore,
    pub grassmann_rank: usize,
}

impl RealCore {
    /// Index 0..7 in the mod-8 class group.
    pub fn index(self) -> u8 {
        match self {
            RealCore::Triv => 0,
            RealCore::DPlus(k) => k,
            RealCore::Quat => 4,
            RealCore::DMinus(k) => 8 - k,
        }
    }

    pub fn from_index(d: u8) -> RealCore {
        match d % 8 {
            0 => RealCore::Triv,
            k @ 1..=3 => RealCore::DPlus(k),
            4 => RealCore::Quat,
            k => RealCore::DMinus(8 - k),
        }
    }

    /// The hat functor on cores: swaps D_+^k and D_-^k.
    pub fn hat(self) -> RealCore {
        match self {
            RealCore::DPlus(k) => RealCore::DMinus(k),
            RealCore::DMinus(k) => RealCore::DPlus(k),
            other => other,
        }
    }

    pub fn name(self) -> String {
        match self {
            RealCore::Triv => "R".to_string(),
            RealCore::Quat => "H".to_string(),
            RealCore::DPlus(1) => "D+".to_string(),
            RealCore::DPlus(k) => format!("D+^{k}"),
            RealCore::DMinus(1) => "D-".to_string(),
            RealCore::DMinus(k) => format!("D-^{k}"),
        }
    }
}

impl ComplexCore {
    pub fn name(self) -> String {
        match self {
            ComplexCore::TrivC => "C".to_string(),
            ComplexCore::DOdd => "D".to_string(),
        }
    }
}

impl std::fmt::Display for RealClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.grassmann_rank > 0 {
            write!(f, "{} ⊗ Λ({})", self.core.name(), self.grassmann_rank)
        } else {
            write!(f, "{}", self.core.name())
        }
    }
}

impl std::fmt::Display for ComplexClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.grassmann_rank > 0 {
            write!(f, "{} ⊗ Λ({})", self.core.name(), self.grassmann_rank)
        } else {
            write!(f, "{}", self.core.name())
        }
    }
}

/// The σ-graded basic class of R_{p,q,r}: core by (p−q) mod 8 via the map
/// derived from the theorem's proof chain, hat-swapped for π.
pub fn real_basic_class(p: usize, q: usize, r: usize, twist: Twist) -> RealClass {
    let d = (p as i64 - q as i64).rem_euclid(8) as u8;
    let core = RealCore::from_index(d);
    let core = match twist {
        Twist::Sigma => core,
        Twist::Pi => core.hat(),
    };
    RealClass {
        core,
        grassmann_rank: r,
    }
}

/// The graded basic class of C_{p,q}; identical for σ and π.
pub fn complex_basic_class(p: usize, q: usize) -> ComplexClass {
    ComplexClass {
        core: if p % 2 == 0 {
            ComplexCore::TrivC
        } else {
            ComplexCore::DOdd
        },
        grassmann_rank: q,
    }
}

fn trivial_algebra<K: ExactScalar>(label: &str) -> SuperAlgebra<K> {
    SuperAlgebra::general(
        vec![0],
        vec![vec![(0, K::one())]],
        std::iter::once((0, K::one())).collect(),
        label.to_string(),
        vec!["1".to_string()],
    )
}

/// The quaternions as the even subalgebra ⟨1, i, j, k⟩ of D_+³, with
/// i = e2e3, j = e1e3, k = e1e2.
pub fn quaternion_algebra() -> SuperAlgebra<Rat> {
    let d3 = clifford_real(3, 0, 0).unwrap();
    let basis = vec![
        d3.basis_element(0),
        d3.basis_element(0b110),
        d3.basis_element(0b101),
        d3.basis_element(0b011),
    ];
    let names = ["1", "i", "j", "k"].iter().map(|s| s.to_string()).collect();
    d3.subalgebra_on_basis(&basis, &d3.unit(), "H".to_string(), names)
        .unwrap()
        .algebra
}

/// Realize a real class, returning the algebra together with its canonical
/// generators (core generators, then Grassmann generators).
pub fn realize_real_with_gens(c: &RealClass) -> (SuperAlgebra<Rat>, Vec<Element<Rat>>) {
    let (core, core_gen_idx): (SuperAlgebra<Rat>, Vec<usize>) = match c.core {
        RealCore::Triv => (trivial_algebra("R"), vec![]),
        RealCore::DPlus(k) => {
            let mut a = clifford_real(k as usize, 0, 0).unwrap();
            a.set_label(RealCore::DPlus(k).name());
            (a, (0..k as usize).map(|i| 1 << i).collect())
        }
        RealCore::DMinus(k) => {
            let mut a = clifford_real(0, k as usize, 0).unwrap();
            a.set_label(RealCore::DMinus(k).name());
            (a, (0..k as usize).map(|i| 1 << i).collect())
        }
        RealCore::Quat => (quaternion_algebra(), vec![1, 2]),
    };
    if c.grassmann_rank == 0 {
        let gens = core_gen_idx.iter().map(|&i| core.basis_element(i)).collect();
        return (core, gens);
    }
    let lambda = grassmann_real(c.grassmann_rank).unwrap();
    let tensor = core.skew_tensor(&lambda);
    let mut gens: Vec<Element<Rat>> = core_gen_idx
        .iter()
        .map(|&i| tensor.basis_element(i))
        .collect();
    for i in 0..c.grassmann_rank {
        gens.push(tensor.basis_element(core.dim() * (1 << i)));
    }
    (tensor, gens)
}

pub fn realize_real(c: &RealClass) -> SuperAlgebra<Rat> {
    realize_real_with_gens(c).0
}

pub fn realize_complex_with_gens(c: &ComplexClass) -> (SuperAlgebra<GaussRat>, Vec<Element<GaussRat>>) {
    let (core, core_gen_idx): (SuperAlgebra<GaussRat>, Vec<usize>) = match c.core {
        ComplexCore::TrivC => (trivial_algebra("C"), vec![]),
        ComplexCore::DOdd => {
            let mut a = clifford_complex(1, 0).unwrap();
            a.set_label("D".to_string());
            (a, vec![1])
        }
    };
    if c.grassmann_rank == 0 {
        let gens = core_gen_idx.iter().map(|&i| core.basis_element(i)).collect();
        return (core, gens);
    }
    let lambda = clifford_complex(0, c.grassmann_rank).unwrap();
    let tensor = core.skew_tensor(&lambda);
    let mut gens: Vec<Element<GaussRat>> = core_gen_idx
        .iter()
        .map(|&i| tensor.basis_element(i))
        .collect();
    for i in 0..c.grassmann_rank {
        gens.push(tensor.basis_element(core.dim() * (1 << i)));
    }
    (tensor, gens)
}

pub fn realize_complex(c: &ComplexClass) -> SuperAlgebra<GaussRat> {
    realize_complex_with_gens(c).0
}

/// If z² is a scalar multiple of the unit, that scalar.
fn scalar_square<K: ExactScalar>(a: &SuperAlgebra<K>, z: &Element<K>) -> Result<Option<K>> {
    let sq = a.mul(z, z)?;
    let unit = a.unit();
    if sq.is_zero() {
        return Ok(Some(K::zero()));
    }
    // sq must be c·unit.
    let Some(lead) = sq.support().next() else {
        return Ok(Some(K::zero()));
    };
    let u_lead = unit.coeff(lead);
    if u_lead.is_zero() {
        return Ok(None);
    }
    let c = sq.coeff(lead) * u_lead.inverse().unwrap();
    if unit.scale(&c) == sq {
        Ok(Some(c))
    } else {
        Ok(None)
    }
}

/// Homogeneous candidates z in B of the given parity whose square is exactly
/// `target`·unit after scaling (target ∈ {0, ±1}); built from signed single
/// and double basis combinations.
fn candidate_pool<K: ExactScalar>(
    b: &SuperAlgebra<K>,
    parity: u8,
    target: i8,
) -> Result<Vec<Element<K>>> {
    let idx: Vec<usize> = (0..b.dim()).filter(|&i| b.parity_of(i) == parity).collect();
    let mut raw: Vec<Element<K>> = idx.iter().map(|&i| b.basis_element(i)).collect();
    for (n, &i) in idx.iter().enumerate() {
        for &j in idx.iter().skip(n + 1) {
            let bi = b.basis_element(i);
            let bj = b.basis_element(j);
            raw.push(bi.add(&bj)?);
            raw.push(bi.sub(&bj)?);
        }
    }
    let mut out = Vec::new();
    for z in raw {
        let Some(c) = scalar_square(b, &z)? else {
            continue;
        };
        if target == 0 {
            if c.is_zero() && !z.is_zero() {
                out.push(z);
            }
            continue;
        }
        if c.is_zero() {
            continue;
        }
        // Want (z/m)² = target, i.e. m² = c/target.
        let ratio = if target == 1 { c } else { -c };
        if let Some(m) = ratio.sqrt_exact() {
            if let Some(minv) = m.inverse() {
                out.push(z.scale(&minv));
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq)]
enum PairRel {
    Commute,
    Anticommute,
}

/// Search images in B for the model generators (each squaring to 0 or ±1 in
/// the model) such that the assignment extends to a graded isomorphism.
pub fn find_generator_images<K: ExactScalar>(
    model: &SuperAlgebra<K>,
    gens: &[Element<K>],
    b: &SuperAlgebra<K>,
) -> Result<Option<Vec<Element<K>>>> {
    if model.dim() != b.dim() || model.graded_dims() != b.graded_dims() {
        return Ok(None);
    }
    if gens.is_empty() {
        return Ok(if model.dim() == 1 { Some(vec![]) } else { None });
    }
    // Model data: square targets, parities, pairwise relations.
    let mut targets = Vec::new();
    let mut parities = Vec::new();
    for g in gens {
        let c = scalar_square(model, g)?.expect("model generator squares to a scalar");
        let t = if c.is_zero() {
            0i8
        } else if c == K::one() {
            1
        } else if c == -K::one() {
            -1
        } else {
            panic!("model generator square must be 0 or ±1");
        };
        targets.push(t);
        parities.push(model.homogeneous_parity(g).expect("model generator homogeneous"));
    }
    let mut rels = vec![vec![PairRel::Commute; gens.len()]; gens.len()];
    for i in 0..gens.len() {
        for j in 0..i {
            let ij = model.mul(&gens[i], &gens[j])?;
            let ji = model.mul(&gens[j], &gens[i])?;
            rels[i][j] = if ij == ji {
                PairRel::Commute
            } else if ij == ji.neg() {
                PairRel::Anticommute
            } else {
                panic!("model generators neither commute nor anticommute");
            };
        }
    }
    let pools: Vec<Vec<Element<K>>> = targets
        .iter()
        .zip(&parities)
        .map(|(&t, &p)| candidate_pool(b, p, t))
        .collect::<Result<_>>()?;
    let mut chosen: Vec<Element<K>> = Vec::new();
    let mut span = RowSpan::new(b.dim());
    fn backtrack<K: ExactScalar>(
        depth: usize,
        model: &SuperAlgebra<K>,
        gens: &[Element<K>],
        b: &SuperAlgebra<K>,
        pools: &[Vec<Element<K>>],
        rels: &[Vec<PairRel>],
        chosen: &mut Vec<Element<K>>,
        span: &mut RowSpan<K>,
    ) -> Result<Option<Vec<Element<K>>>> {
        if depth == gens.len() {
            return Ok(if is_isomorphic_via(model, b, gens, chosen)? {
                Some(chosen.clone())
            } else {
                None
            });
        }
        for cand in &pools[depth] {
            let mut ok = true;
            for (prev_idx, prev) in chosen.iter().enumerate() {
                let xy = b.mul(cand, prev)?;
                let yx = b.mul(prev, cand)?;
                let matches = match rels[depth][prev_idx] {
                    PairRel::Commute => xy == yx,
                    PairRel::Anticommute => xy == yx.neg(),
                };
                if !matches {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            if !span.insert(b.dense_coords(cand)) {
                continue;
            }
            chosen.push(cand.clone());
            if let Some(found) =
                backtrack(depth + 1, model, gens, b, pools, rels, chosen, span)?
            {
                return Ok(Some(found));
            }
            chosen.pop();
            // Rebuild the span without the rejected candidate.
            let mut fresh = RowSpan::new(b.dim());
            for z in chosen.iter() {
                fresh.insert(b.dense_coords(z));
            }
            *span = fresh;
        }
        Ok(None)
    }
    backtrack(0, model, gens, b, &pools, &rels, &mut chosen, &mut span)
}

const REAL_CORES: [RealCore; 8] = [
    RealCore::Triv,
    RealCore::DPlus(1),
    RealCore::DPlus(2),
    RealCore::DPlus(3),
    RealCore::Quat,
    RealCore::DMinus(1),
    RealCore::DMinus(2),
    RealCore::DMinus(3),
];

fn rank_from_ratio(dim_b: usize, dim_s: usize) -> Result<usize> {
    if dim_s == 0 || dim_b % dim_s != 0 {
        return Err(Error::UnrecognizedBasic);
    }
    let ratio = dim_b / dim_s;
    if !ratio.is_power_of_two() {
        return Err(Error::UnrecognizedBasic);
    }
    Ok(ratio.trailing_zeros() as usize)
}

/// Identify a basic algebra: quotient by the radical, read the Grassmann
/// rank off the radical dimension, and match the semisimple quotient against
/// the realized cores by generator-image search.
pub fn identify_real(b: &SuperAlgebra<Rat>) -> Result<RealClass> {
    let (s, _) = quotient_by_radical(b)?;
    let rank = rank_from_ratio(b.dim(), s.dim())?;
    for core in REAL_CORES {
        let class = RealClass {
            core,
            grassmann_rank: 0,
        };
        let (model, gens) = realize_real_with_gens(&class);
        if model.dim() != s.dim() || model.graded_dims() != s.graded_dims() {
            continue;
        }
        if find_generator_images(&model, &gens, &s)?.is_some() {
            return Ok(RealClass {
                core,
                grassmann_rank: rank,
            });
        }
    }
    Err(Error::UnrecognizedBasic)
}

pub fn identify_complex(b: &SuperAlgebra<GaussRat>) -> Result<ComplexClass> {
    let (s, _) = quotient_by_radical(b)?;
    let rank = rank_from_ratio(b.dim(), s.dim())?;
    for core in [ComplexCore::TrivC, ComplexCore::DOdd] {
        let class = ComplexClass {
            core,
            grassmann_rank: 0,
        };
        let (model, gens) = realize_complex_with_gens(&class);
        if model.dim() != s.dim() || model.graded_dims() != s.graded_dims() {
            continue;
        }
        if find_generator_images(&model, &gens, &s)?.is_some() {
            return Ok(ComplexClass {
                core,
                grassmann_rank: rank,
            });
        }
    }
    Err(Error::UnrecognizedBasic)
}

/// Brute-force classification with no class arithmetic: build the Clifford
/// algebra, reduce to a basic representative, identify it. Returns the class
/// and whether any step was unconfirmed within budget.
pub fn oracle_classify_real(
    p: usize,
    q: usize,
    r: usize,
    twist: Twist,
    seed: u64,
    budget: usize,
) -> Result<(RealClass, bool)> {
    if p + q + r > 8 {
        return Err(Error::TooLarge(1 << (p + q + r)));
    }
    let a = clifford_real(p, q, r)?;
    let red = basic_reduction(&a, twist, seed, budget)?;
    Ok((identify_real(&red.algebra)?, red.unconfirmed))
}

pub fn oracle_classify_complex(
    p: usize,
    q: usize,
    twist: Twist,
    seed: u64,
    budget: usize,
) -> Result<(ComplexClass, bool)> {
    if p + q > 8 {
        return Err(Error::TooLarge(1 << (p + q)));
    }
    let a = clifford_complex(p, q)?;
    let red = basic_reduction(&a, twist, seed, budget)?;
    Ok((identify_complex(&red.algebra)?, red.unconfirmed))
}

/// The tensor-compatibility law: the basic representative of A⊗̂A' is
/// isomorphic to the basic representative of basic(A)⊗̂basic(A'), exhibited
/// by an explicit generator-image isomorphism between the two computed
/// corners.
pub fn tensor_law_holds_real(
    a1: &SuperAlgebra<Rat>,
    a2: &SuperAlgebra<Rat>,
    twist: Twist,
    seed: u64,
    budget: usize,
) -> Result<bool> {
    let direct = basic_reduction(&a1.skew_tensor(a2), twist, seed, budget)?;
    let b1 = basic_reduction(a1, twist, seed, budget)?;
    let b2 = basic_reduction(a2, twist, seed, budget)?;
    let staged = basic_reduction(&b1.algebra.skew_tensor(&b2.algebra), twist, seed, budget)?;
    let c1 = identify_real(&direct.algebra)?;
    let c2 = identify_real(&staged.algebra)?;
    if c1 != c2 {
        return Ok(false);
    }
    let (model, gens) = realize_real_with_gens(&c1);
    let Some(im_direct) = find_generator_images(&model, &gens, &direct.algebra)? else {
        return Ok(false);
    };
    let Some(im_staged) = find_generator_images(&model, &gens, &staged.algebra)? else {
        return Ok(false);
    };
    // Compose: the images of the model generators generate both corners, so
    // mapping one family to the other is a direct isomorphism test.
    is_isomorphic_via(&direct.algebra, &staged.algebra, &im_direct, &im_staged)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn class_map_examples() {
        assert_eq!(
            real_basic_class(8, 0, 0, Twist::Sigma).core,
            RealCore::Triv
        );
        assert_eq!(real_basic_class(0, 4, 0, Twist::Sigma).core, RealCore::Quat);
        assert_eq!(
            real_basic_class(2, 0, 0, Twist::Sigma).core,
            RealCore::DPlus(2)
        );
        assert_eq!(
            real_basic_class(5, 0, 0, Twist::Sigma).core,
            RealCore::DMinus(3)
        );
        let c = real_basic_class(1, 2, 3, Twist::Sigma);
        assert_eq!(c.core, RealCore::DMinus(1));
        assert_eq!(c.grassmann_rank, 3);
    }

    #[test]
    fn complex_class_examples() {
        assert_eq!(complex_basic_class(4, 0).core, ComplexCore::TrivC);
        assert_eq!(complex_basic_class(3, 2).core, ComplexCore::DOdd);
        assert_eq!(complex_basic_class(3, 2).grassmann_rank, 2);
        assert_eq!(complex_basic_class(0, 5).core, ComplexCore::TrivC);
    }

    #[test]
    fn hat_duality() {
        for p in 0..=4usize {
            for q in 0..=4usize {
                assert_eq!(
                    real_basic_class(p, q, 1, Twist::Pi),
                    real_basic_class(q, p, 1, Twist::Sigma)
                );
            }
        }
    }

    #[test]
    fn group_law_mod_8() {
        for p in 0..=4usize {
            for q in 0..=4usize {
                for p2 in 0..=4usize {
                    for q2 in 0..=4usize {
                        if p + q + p2 + q2 > 8 {
                            continue;
                        }
                        let lhs = real_basic_class(p + p2, q + q2, 0, Twist::Sigma);
                        let a = real_basic_class(p, q, 0, Twist::Sigma).core.index();
                        let b = real_basic_class(p2, q2, 0, Twist::Sigma).core.index();
                        assert_eq!(lhs.core, RealCore::from_index((a + b) % 8));
                    }
                }
            }
        }
    }

    #[test]
    fn quaternion_relations() {
        let h = quaternion_algebra();
        assert_eq!(h.dim(), 4);
        assert_eq!(h.graded_dims(), (4, 0));
        let i = h.basis_element(1);
        let j = h.basis_element(2);
        let k = h.basis_element(3);
        let minus_one = h.unit().neg();
        assert_eq!(h.mul(&i, &i).unwrap(), minus_one);
        assert_eq!(h.mul(&j, &j).unwrap(), minus_one);
        assert_eq!(h.mul(&k, &k).unwrap(), minus_one);
        assert_eq!(h.mul(&i, &j).unwrap(), k);
        assert_eq!(h.mul(&j, &i).unwrap(), k.neg());
        assert!(h.associativity_holds_exhaustive());
    }

    #[test]
    fn theta_squares() {
        // θ_± = e1e2e3 in D_±³: θ_+² = −1, θ_−² = +1.
        let dp3 = clifford_real(3, 0, 0).unwrap();
        let theta_p = dp3.basis_element(0b111);
        assert_eq!(dp3.mul(&theta_p, &theta_p).unwrap(), dp3.unit().neg());
        let dm3 = clifford_real(0, 3, 0).unwrap();
        let theta_m = dm3.basis_element(0b111);
        assert_eq!(dm3.mul(&theta_m, &theta_m).unwrap(), dm3.unit());
    }

    #[test]
    fn identify_realize_roundtrip_real() {
        for core in REAL_CORES {
            for rank in 0..=2usize {
                let class = RealClass {
                    core,
                    grassmann_rank: rank,
                };
                let b = realize_real(&class);
                assert_eq!(identify_real(&b).unwrap(), class, "{class}");
            }
        }
    }

    #[test]
    fn identify_realize_roundtrip_complex() {
        for core in [ComplexCore::TrivC, ComplexCore::DOdd] {
            for rank in 0..=2usize {
                let class = ComplexClass {
                    core,
                    grassmann_rank: rank,
                };
                let b = realize_complex(&class);
                assert_eq!(identify_complex(&b).unwrap(), class, "{class}");
            }
        }
    }

    #[test]
    fn oracle_small_examples() {
        let (c, unconfirmed) =
            oracle_classify_real(1, 1, 0, Twist::Sigma, 1, 100).unwrap();
        assert_eq!(c.core, RealCore::Triv);
        assert!(!unconfirmed);
        let (c, _) = oracle_classify_real(4, 0, 0, Twist::Sigma, 1, 100).unwrap();
        assert_eq!(c.core, RealCore::Quat);
        let (c, _) = oracle_classify_real(7, 0, 0, Twist::Sigma, 1, 100).unwrap();
        assert_eq!(c.core, RealCore::DMinus(1));
    }

    #[test]
    fn oracle_complex_examples() {
        let (c, _) = oracle_classify_complex(2, 0, Twist::Sigma, 1, 100).unwrap();
        assert_eq!(c.core, ComplexCore::TrivC);
        let (c, _) = oracle_classify_complex(3, 1, Twist::Sigma, 1, 100).unwrap();
        assert_eq!(c.core, ComplexCore::DOdd);
        assert_eq!(c.grassmann_rank, 1);
    }

    #[test]
    fn dddd_isomorphisms() {
        // D_−⊗̂ℍ ≅ D_+³ and D_+⊗̂ℍ ≅ D_−³ by generator search.
        let h = quaternion_algebra();
        let dm = clifford_real(0, 1, 0).unwrap();
        let dp = clifford_real(1, 0, 0).unwrap();
        let lhs1 = dm.skew_tensor(&h);
        let (model1, gens1) = realize_real_with_gens(&RealClass {
            core: RealCore::DPlus(3),
            grassmann_rank: 0,
        });
        assert!(find_generator_images(&model1, &gens1, &lhs1)
            .unwrap()
            .is_some());
        let lhs2 = dp.skew_tensor(&h);
        let (model2, gens2) = realize_real_with_gens(&RealClass {
            core: RealCore::DMinus(3),
            grassmann_rank: 0,
        });
        assert!(find_generator_images(&model2, &gens2, &lhs2)
            .unwrap()
            .is_some());
    }

    #[test]
    fn basic_reduction_of_d4_is_quaternion() {
        for a in [
            clifford_real(4, 0, 0).unwrap(),
            clifford_real(0, 4, 0).unwrap(),
        ] {
            let red = basic_reduction(&a, Twist::Sigma, 1, 200).unwrap();
            assert_eq!(red.algebra.dim(), 4);
            assert_eq!(red.algebra.graded_dims(), (4, 0));
            assert_eq!(identify_real(&red.algebra).unwrap().core, RealCore::Quat);
        }
    }

    #[test]
    fn tensor_law_small() {
        let cases: Vec<(SuperAlgebra<Rat>, SuperAlgebra<Rat>)> = vec![
            (
                clifford_real(1, 0, 0).unwrap(),
                clifford_real(0, 1, 0).unwrap(),
            ),
            (
                clifford_real(2, 0, 0).unwrap(),
                clifford_real(1, 1, 0).unwrap(),
            ),
            (
                clifford_real(1, 0, 1).unwrap(),
                clifford_real(0, 1, 0).unwrap(),
            ),
        ];
        for (a1, a2) in cases {
            assert!(
                tensor_law_holds_real(&a1, &a2, Twist::Sigma, 1, 120).unwrap(),
                "{} vs {}",
                a1.label(),
                a2.label()
            );
        }
    }

    #[test]
    fn gaussian_normalization_in_identify() {
        // hat(C_{1,0}) realizes D with generator squaring to −1; over ℚ(𝕚)
        // identification still lands on DOdd.
        let d = clifford_complex(1, 0).unwrap().hat();
        assert_eq!(identify_complex(&d).unwrap().core, ComplexCore::DOdd);
        let i = GaussRat::i();
        assert_eq!(i.clone() * i, -GaussRat::one());
    }
}
