use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::lifts::{enumerate_aut_a_e, iota, is_automorphism_of, solve_lift, LiftedAut};
use super::pairs::{transport, WellsInstance};
use crate::cohomology::coboundary_witness;
use crate::extension::build_extension;
use crate::{Error, Result};

/// Above this many `(h₂, p₁, p₂, β)` tuples the semidirect check runs over generators only.
const SEMIDIRECT_BUDGET: usize = 1 << 22;

/// `act[p][h]`: class index of `^p h`, with classes in mixed-radix order of `H²`.
#[derive(Debug, Clone)]
pub struct ActionTable {
    pub classes: Vec<Vec<i64>>,
    pub act: Vec<Vec<usize>>,
    /// `product[p][q]` is the index of `p·q` among the pairs.
    pub product: Vec<Vec<usize>>,
    pub identity: usize,
}

impl ActionTable {
    pub fn new(inst: &WellsInstance) -> Result<Self> {
        let s = inst.h2.structure();
        let classes = inst.h2.all_coords();
        let act = inst
            .pairs
            .iter()
            .map(|p| classes.iter().map(|c| inst.act_on_class(p, c).map(|m| s.index(&m))).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let product = inst
            .pairs
            .iter()
            .map(|p| {
                inst.pairs
                    .iter()
                    .map(|q| inst.pair_index(&p.compose(q)).ok_or_else(|| Error::Internal("pairs not closed".into())))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let identity = inst.pairs.iter().position(|p| p.is_identity()).ok_or_else(|| Error::Internal("no identity pair".into()))?;
        Ok(ActionTable { classes, act, product, identity })
    }

    fn add(&self, inst: &WellsInstance, h: usize, k: usize) -> usize {
        inst.h2.structure().add_index(h, k)
    }

    fn sub(&self, inst: &WellsInstance, h: usize, k: usize) -> usize {
        let s = inst.h2.structure();
        s.add_index(h, s.neg_index(k))
    }

    /// Index of the unit vectors of `H²`, which generate it.
    fn generators(&self, inst: &WellsInstance) -> Vec<usize> {
        let s = inst.h2.structure();
        (0..s.rank())
            .map(|j| {
                let mut unit = alloc::vec![0; s.rank()];
                unit[j] = 1;
                s.index(&unit)
            })
            .collect()
    }

    /// `Θ(p) = base − ^p base` as class indices.
    pub fn theta(&self, inst: &WellsInstance, base: usize) -> Vec<usize> {
        (0..inst.pairs.len()).map(|p| self.sub(inst, base, self.act[p][base])).collect()
    }
}

/// Machine-checkable record of the exact sequence for one extension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WellsCertificate {
    pub x_size: usize,
    pub a_factors: Vec<i64>,
    pub base: Vec<i64>,
    pub z1_order: usize,
    pub aut_a_e_order: usize,
    pub pairs_order: usize,
    pub h2_order: usize,
    pub aut_a_e: Vec<LiftedAut>,
    /// Indices into `aut_a_e` of `ι(Z¹)`.
    pub iota_image: Vec<usize>,
    /// Indices into `aut_a_e` with `Ψ = id`.
    pub psi_kernel: Vec<usize>,
    /// Pair indices hit by `Ψ`.
    pub psi_image: Vec<usize>,
    /// `Θ(p)` per pair, in canonical coordinates.
    pub theta: Vec<Vec<i64>>,
    pub theta_zero: Vec<usize>,
    /// Lifts built from the coboundary witness for every pair in `Θ⁻¹{0}`.
    pub proof_lifts: Vec<LiftedAut>,
    pub iota_injective: bool,
    pub iota_homomorphism: bool,
    pub ker_psi_is_im_iota: bool,
    pub im_psi_is_theta_zero: bool,
    pub proof_lifts_valid: bool,
    pub non_liftable_confirmed: bool,
    pub theta_cocycle: bool,
}

impl WellsCertificate {
    pub fn is_valid(&self) -> bool {
        self.iota_injective
            && self.iota_homomorphism
            && self.ker_psi_is_im_iota
            && self.im_psi_is_theta_zero
            && self.proof_lifts_valid
            && self.non_liftable_confirmed
            && self.theta_cocycle
    }
}

/// Enumerates every group in the sequence for the extension of class `base`.
pub fn verify_wells(inst: &WellsInstance, base: &[i64]) -> Result<WellsCertificate> {
    let a = &inst.a;
    let c = inst.h2.lift(base)?;
    let ext = build_extension(&inst.x, a, &c)?;
    let e = ext.total();
    let aut = enumerate_aut_a_e(inst, &c, e)?;
    let perms: Vec<Vec<usize>> = aut.iter().map(|l| l.to_permutation(a)).collect();
    let position = |p: &Vec<usize>| perms.iter().position(|q| q == p);

    let z1: Vec<Vec<usize>> = inst.z1.all_coords().iter().map(|k| inst.z1.lift_map(k)).collect();
    let mut iota_perms = Vec::new();
    for lambda in &z1 {
        let l = iota(&inst.x, a, lambda).map_err(|f| Error::Internal(alloc::format!("Z¹ member rejected: {f}")))?;
        iota_perms.push(l.to_permutation(a));
    }
    let iota_injective = iota_perms.iter().collect::<BTreeSet<_>>().len() == z1.len();
    let mut iota_homomorphism = true;
    for (i, l1) in z1.iter().enumerate() {
        for (j, l2) in z1.iter().enumerate() {
            let sum: Vec<usize> = l1.iter().zip(l2).map(|(&s, &t)| a.add_index(s, t)).collect();
            let k = z1.iter().position(|l| *l == sum);
            let composed = super::lifts::compose_perm(&iota_perms[i], &iota_perms[j]);
            iota_homomorphism &= k.is_some_and(|k| iota_perms[k] == composed);
        }
    }
    let mut iota_image: Vec<usize> = iota_perms.iter().filter_map(position).collect();
    iota_image.sort();
    let iota_inside = iota_image.len() == iota_perms.len();
    let psi_kernel: Vec<usize> = (0..aut.len()).filter(|&i| aut[i].pair.is_identity()).collect();
    let ker_psi_is_im_iota = iota_inside && psi_kernel == iota_image;

    let mut psi_image: Vec<usize> = aut
        .iter()
        .map(|l| inst.pair_index(&l.pair).ok_or_else(|| Error::Internal("lift of an unknown pair".into())))
        .collect::<Result<BTreeSet<_>>>()?
        .into_iter()
        .collect();
    psi_image.sort();

    let table = ActionTable::new(inst)?;
    let s = inst.h2.structure();
    let b = s.index(base);
    let theta_idx = table.theta(inst, b);
    let theta: Vec<Vec<i64>> = theta_idx.iter().map(|&t| table.classes[t].clone()).collect();
    let theta_zero: Vec<usize> = (0..inst.pairs.len()).filter(|&p| theta_idx[p] == 0).collect();
    let im_psi_is_theta_zero = psi_image == theta_zero;

    let mut proof_lifts = Vec::new();
    let mut proof_lifts_valid = true;
    let mut non_liftable_confirmed = true;
    for (k, p) in inst.pairs.iter().enumerate() {
        if theta_idx[k] == 0 {
            let diff = transport(p, &c).sub(&c);
            let Some(w) = coboundary_witness(&inst.x, &diff)? else {
                proof_lifts_valid = false;
                continue;
            };
            // ψ(x, a) = (φ(x), −w(φ(x)) + θ(a))
            let lambda = (0..inst.x.size()).map(|x| a.neg_index(w[p.phi[x]])).collect();
            let l = LiftedAut { pair: p.clone(), lambda };
            let perm = l.to_permutation(a);
            proof_lifts_valid &= is_automorphism_of(e, &perm) && position(&perm).is_some();
            proof_lifts.push(l);
        } else {
            non_liftable_confirmed &= solve_lift(inst, &c, p)?.is_none();
        }
    }

    let theta_cocycle = theta_cocycle_holds(inst, &table, &theta_idx);
    Ok(WellsCertificate {
        x_size: inst.x.size(),
        a_factors: a.invariant_factors().to_vec(),
        base: base.to_vec(),
        z1_order: z1.len(),
        aut_a_e_order: aut.len(),
        pairs_order: inst.pairs.len(),
        h2_order: inst.h2.order(),
        aut_a_e: aut,
        iota_image,
        psi_kernel,
        psi_image,
        theta,
        theta_zero,
        proof_lifts,
        iota_injective,
        iota_homomorphism,
        ker_psi_is_im_iota,
        im_psi_is_theta_zero,
        proof_lifts_valid,
        non_liftable_confirmed,
        theta_cocycle,
    })
}

fn theta_cocycle_holds(inst: &WellsInstance, t: &ActionTable, theta: &[usize]) -> bool {
    let n = inst.pairs.len();
    (0..n).all(|p| (0..n).all(|q| theta[t.product[p][q]] == t.add(inst, theta[p], t.act[p][theta[q]])))
}

/// Checks on `Θ` and the semidirect product `H² ⋊ (Aut(X) × Aut(A))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaReport {
    /// `Θ(pq) = Θ(p) + ^pΘ(q)` for all pairs; first failing `(p, q)` otherwise.
    pub cocycle_law: core::result::Result<(), (usize, usize)>,
    /// The pairs act by group automorphisms, as a left action.
    pub action_by_automorphisms: bool,
    /// `(h, p)·β = h + ^pβ` is an action of the semidirect product.
    pub semidirect_action: bool,
    /// The stabiliser of `base` is `{(Θ(p), p)}` and is a complement of `H²`.
    pub stabiliser_is_complement: bool,
}

impl ThetaReport {
    pub fn holds(&self) -> bool {
        self.cocycle_law.is_ok() && self.action_by_automorphisms && self.semidirect_action && self.stabiliser_is_complement
    }
}

pub fn verify_theta_cocycle(inst: &WellsInstance, base: &[i64]) -> Result<ThetaReport> {
    let t = ActionTable::new(inst)?;
    verify_theta_with(inst, &t, base)
}

pub fn verify_theta_with(inst: &WellsInstance, t: &ActionTable, base: &[i64]) -> Result<ThetaReport> {
    let s = inst.h2.structure();
    let b = s.index(base);
    let theta = t.theta(inst, b);
    let (np, nh) = (inst.pairs.len(), t.classes.len());

    let mut cocycle_law = Ok(());
    'outer: for p in 0..np {
        for q in 0..np {
            if theta[t.product[p][q]] != t.add(inst, theta[p], t.act[p][theta[q]]) {
                cocycle_law = Err((p, q));
                break 'outer;
            }
        }
    }

    // Additivity against a generating set extends to all of H² by induction.
    let gens = t.generators(inst);
    let action_by_automorphisms = (0..nh).all(|h| t.act[t.identity][h] == h)
        && (0..np).all(|p| (0..np).all(|q| (0..nh).all(|h| t.act[t.product[p][q]][h] == t.act[p][t.act[q][h]])))
        && (0..np).all(|p| (0..nh).all(|h| gens.iter().all(|&k| t.act[p][t.add(inst, h, k)] == t.add(inst, t.act[p][h], t.act[p][k]))));

    // (h₁, p₁)(h₂, p₂) = (h₁ + ^{p₁}h₂, p₁p₂). Translating by h₁ is a bijection on both
    // sides, so h₁ = 0 suffices. Past the budget, h₂ and β run over 0 and the generators.
    let on = |h: usize, p: usize, beta: usize| t.add(inst, h, t.act[p][beta]);
    let small = nh * nh * np * np <= SEMIDIRECT_BUDGET;
    let h2_range: Vec<usize> = if small { (0..nh).collect() } else { core::iter::once(0).chain(gens.iter().copied()).collect() };
    let beta_range = h2_range.clone();
    let mut semidirect_action = true;
    'semi: for p1 in 0..np {
        for &h2 in &h2_range {
            for p2 in 0..np {
                let (h, p) = (t.act[p1][h2], t.product[p1][p2]);
                for &beta in &beta_range {
                    if on(h, p, beta) != on(0, p1, on(h2, p2, beta)) {
                        semidirect_action = false;
                        break 'semi;
                    }
                }
            }
        }
    }

    let stabiliser: Vec<(usize, usize)> =
        (0..nh).flat_map(|h| (0..np).map(move |p| (h, p))).filter(|&(h, p)| on(h, p, b) == b).collect();
    let graph: Vec<(usize, usize)> = {
        let mut g: Vec<(usize, usize)> = (0..np).map(|p| (theta[p], p)).collect();
        g.sort();
        g
    };
    let meets_h2_trivially = stabiliser.iter().filter(|&&(_, p)| p == t.identity).count() == 1;
    let stabiliser_is_complement = stabiliser == graph && stabiliser.len() == np && meets_h2_trivially;

    Ok(ThetaReport { cocycle_law, action_by_automorphisms, semidirect_action, stabiliser_is_complement })
}

/// `Θ_{base₁}(p) + ^pβ = Θ_{base₂}(p) + β` with `base₁ = β + base₂`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceReport {
    pub beta: Vec<i64>,
    pub holds: bool,
}

pub fn theta_difference_coboundary(inst: &WellsInstance, base1: &[i64], base2: &[i64]) -> Result<DifferenceReport> {
    let t = ActionTable::new(inst)?;
    theta_difference_with(inst, &t, base1, base2)
}

pub fn theta_difference_with(inst: &WellsInstance, t: &ActionTable, base1: &[i64], base2: &[i64]) -> Result<DifferenceReport> {
    let s = inst.h2.structure();
    let beta = inst.class_sub(base1, base2);
    let bi = s.index(&beta);
    let th1 = t.theta(inst, s.index(base1));
    let th2 = t.theta(inst, s.index(base2));
    let holds = (0..inst.pairs.len()).all(|p| t.add(inst, th1[p], t.act[p][bi]) == t.add(inst, th2[p], bi));
    Ok(DifferenceReport { beta, holds })
}

/// Orbit and stabiliser of a class under `Aut(X) × Aut(A)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    pub base: Vec<i64>,
    pub orbit: Vec<Vec<i64>>,
    pub stabiliser: Vec<usize>,
    pub pairs_order: usize,
    pub h2_order: usize,
    /// `|orbit|·|stabiliser| = |Aut(X) × Aut(A)|`
    pub orbit_stabiliser: bool,
    /// `|H²| ≥ |Aut(X) × Aut(A)| / |stabiliser|`
    pub bound: bool,
}

pub fn orbit_bound_report(inst: &WellsInstance, base: &[i64]) -> Result<OrbitReport> {
    let t = ActionTable::new(inst)?;
    orbit_bound_with(inst, &t, base)
}

pub fn orbit_bound_with(inst: &WellsInstance, t: &ActionTable, base: &[i64]) -> Result<OrbitReport> {
    let b = inst.h2.structure().index(base);
    let orbit_idx: BTreeSet<usize> = t.act.iter().map(|row| row[b]).collect();
    let stabiliser: Vec<usize> = (0..inst.pairs.len()).filter(|&p| t.act[p][b] == b).collect();
    let np = inst.pairs.len();
    let h2_order = inst.h2.order();
    Ok(OrbitReport {
        base: base.to_vec(),
        orbit: orbit_idx.iter().map(|&i| t.classes[i].clone()).collect(),
        orbit_stabiliser: orbit_idx.len() * stabiliser.len() == np,
        bound: h2_order * stabiliser.len() >= np && orbit_idx.len() <= h2_order,
        stabiliser,
        pairs_order: np,
        h2_order,
    })
}
