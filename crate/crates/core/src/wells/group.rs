use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use super::lifts::{lift_system, LiftedAut};
use super::pairs::{additive_automorphisms, transport, AutPair, WellsInstance};
use super::certificate::ActionTable;
use crate::abelian::{enumerate_automorphisms, FinAbGroup, AUT_ORDER_BOUND};
use crate::cohomology::{coboundary_witness, compute_h2sym_carrier, compute_hom, lambda_map, Cochain2, CohomologyGroup};
use crate::cohomology::{flat_to_indices, indices_to_flat};
use crate::extension::pair_index;
use crate::structures::{Carrier, LinearCycleSet, Table};
use crate::{Error, Result};

/// Group-side data for `G = H ×_g N` with `H = (X, +)` and trivial action on `N = A`.
#[derive(Debug, Clone)]
pub struct GroupWellsInstance {
    pub h: Carrier,
    pub a: FinAbGroup,
    /// `Z¹(H, N) = Hom(H, N)`.
    pub hom: CohomologyGroup,
    pub h2sym: CohomologyGroup,
    /// `Aut(H) × Aut(N)`.
    pub pairs: Vec<AutPair>,
    trivial: LinearCycleSet,
    index: BTreeMap<(Vec<usize>, Vec<usize>), usize>,
}

fn key(p: &AutPair) -> (Vec<usize>, Vec<usize>) {
    (p.phi.clone(), p.theta_permutation().to_vec())
}

impl GroupWellsInstance {
    pub fn new(h: &Carrier, a: &FinAbGroup) -> Result<Self> {
        let n = h.size();
        let hom = compute_hom(h, a)?;
        let h2sym = compute_h2sym_carrier(h, a)?;
        let aut_h = additive_automorphisms(h, AUT_ORDER_BOUND.max(n))?;
        let aut_a = enumerate_automorphisms(a, AUT_ORDER_BOUND.max(a.order()))?;
        let mut pairs = Vec::with_capacity(aut_h.len() * aut_a.len());
        for phi in &aut_h {
            for theta in &aut_a {
                pairs.push(AutPair::new(phi.clone(), theta.clone())?);
            }
        }
        let index = pairs.iter().enumerate().map(|(i, p)| (key(p), i)).collect();
        // x·y = y turns the lift and witness solvers into their additive halves.
        let trivial = LinearCycleSet::new(h.clone(), Table::from_fn(n, |_, y| y))?;
        Ok(GroupWellsInstance { h: h.clone(), a: a.clone(), hom, h2sym, pairs, trivial, index })
    }

    pub fn pair_index(&self, p: &AutPair) -> Option<usize> {
        self.index.get(&key(p)).copied()
    }

    /// `(x, a) + (y, b) = (x + y, a + b + g(x, y))`.
    pub fn total_sum(&self, g: &Cochain2) -> Table {
        let (n, na) = (self.h.size(), self.a.order());
        Table::from_fn(n * na, |u, v| {
            let (x, s, y, t) = (u / na, u % na, v / na, v % na);
            let value = self.a.add_index(self.a.add_index(s, t), g.g(x, y));
            pair_index(na, self.h.add(x, y), value)
        })
    }

    fn g_only(&self, g: &Cochain2) -> Cochain2 {
        Cochain2::from_fn(self.h.size(), &self.a, |_, _| 0, |x, y| g.g(x, y)).expect("values already in range")
    }

    pub fn act_on_class(&self, p: &AutPair, coords: &[i64]) -> Result<Vec<i64>> {
        let rep = self.h2sym.lift(coords)?;
        self.h2sym.reduce(&transport(p, &rep))
    }

    /// `Ω(p) = [g] − ^p[g]`.
    pub fn omega(&self, base: &[i64], p: &AutPair) -> Result<Vec<i64>> {
        let moved = self.act_on_class(p, base)?;
        let s = self.h2sym.structure();
        Ok(s.add(&crate::abelian::Element(base.to_vec()), &s.neg(&crate::abelian::Element(moved))).0)
    }

    /// One `λ` with `λ(x+y) − λ(x) − λ(y) = g(φx, φy) − θ(g(x, y))`, if any.
    pub fn solve_lift(&self, g: &Cochain2, p: &AutPair) -> Result<Option<Vec<usize>>> {
        let (sys, rhs) = lift_system(&self.trivial, &self.a, &self.g_only(g), p, false);
        Ok(sys.solve(&self.a, &rhs)?.map(|sol| flat_to_indices(&self.a, &sol, self.h.size())))
    }

    /// `Aut_N(G)`: particular lifts shifted by all of `Hom(H, N)`.
    pub fn enumerate_aut_n_g(&self, g: &Cochain2) -> Result<Vec<LiftedAut>> {
        let sum = self.total_sum(g);
        let homs: Vec<Vec<usize>> = self.hom.all_coords().iter().map(|k| self.hom.lift_map(k)).collect();
        let mut out = Vec::new();
        for p in &self.pairs {
            let Some(base) = self.solve_lift(g, p)? else { continue };
            for k in &homs {
                let lambda = base.iter().zip(k).map(|(&s, &t)| self.a.add_index(s, t)).collect();
                let l = LiftedAut { pair: p.clone(), lambda };
                if !preserves(&sum, &l.to_permutation(&self.a)) {
                    return Err(Error::Internal("solved lift is not an automorphism of G".into()));
                }
                out.push(l);
            }
        }
        Ok(out)
    }
}

fn preserves(sum: &Table, perm: &[usize]) -> bool {
    let n = sum.size();
    crate::structures::is_permutation(perm) && (0..n).all(|u| (0..n).all(|v| perm[sum.get(u, v)] == sum.get(perm[u], perm[v])))
}

/// Exactness record for `1 → Hom(H, N) → Aut_N(G) → Aut(H) × Aut(N) → H²_sym(H; N)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupWellsCertificate {
    pub h_size: usize,
    pub a_factors: Vec<i64>,
    /// `[g]` in `H²_sym`.
    pub base: Vec<i64>,
    pub hom_order: usize,
    pub aut_n_g_order: usize,
    pub pairs_order: usize,
    pub h2sym_order: usize,
    pub aut_n_g: Vec<LiftedAut>,
    pub j_image: Vec<usize>,
    pub phi_kernel: Vec<usize>,
    pub phi_image: Vec<usize>,
    pub omega: Vec<Vec<i64>>,
    pub omega_zero: Vec<usize>,
    pub j_injective: bool,
    pub ker_phi_is_im_j: bool,
    pub im_phi_is_omega_zero: bool,
    pub proof_lifts_valid: bool,
    pub non_liftable_confirmed: bool,
}

impl GroupWellsCertificate {
    pub fn is_valid(&self) -> bool {
        self.j_injective && self.ker_phi_is_im_j && self.im_phi_is_omega_zero && self.proof_lifts_valid && self.non_liftable_confirmed
    }
}

/// Group-side certificate for the symmetric cocycle `g` (the `f` part is ignored).
pub fn group_wells(inst: &GroupWellsInstance, g: &Cochain2) -> Result<GroupWellsCertificate> {
    let a = &inst.a;
    let g = inst.g_only(g);
    let base = inst.h2sym.reduce(&g)?;
    let sum = inst.total_sum(&g);
    crate::structures::verify_abelian_group(&sum).map_err(Error::Property)?;
    let aut = inst.enumerate_aut_n_g(&g)?;
    let perms: Vec<Vec<usize>> = aut.iter().map(|l| l.to_permutation(a)).collect();
    let position = |p: &Vec<usize>| perms.iter().position(|q| q == p);

    let homs: Vec<Vec<usize>> = inst.hom.all_coords().iter().map(|k| inst.hom.lift_map(k)).collect();
    let j_perms: Vec<Vec<usize>> = homs
        .iter()
        .map(|l| LiftedAut { pair: AutPair::identity(inst.h.size(), a), lambda: l.clone() }.to_permutation(a))
        .collect();
    let j_injective = j_perms.iter().collect::<BTreeSet<_>>().len() == homs.len()
        && j_perms.iter().all(|p| preserves(&sum, p));
    let mut j_image: Vec<usize> = j_perms.iter().filter_map(position).collect();
    j_image.sort();
    let phi_kernel: Vec<usize> = (0..aut.len()).filter(|&i| aut[i].pair.is_identity()).collect();
    let ker_phi_is_im_j = j_image.len() == j_perms.len() && j_image == phi_kernel;

    let phi_image: Vec<usize> = aut
        .iter()
        .map(|l| inst.pair_index(&l.pair).ok_or_else(|| Error::Internal("lift of an unknown pair".into())))
        .collect::<Result<BTreeSet<_>>>()?
        .into_iter()
        .collect();
    let omega = inst.pairs.iter().map(|p| inst.omega(&base, p)).collect::<Result<Vec<_>>>()?;
    let omega_zero: Vec<usize> = (0..omega.len()).filter(|&k| omega[k].iter().all(|&t| t == 0)).collect();
    let im_phi_is_omega_zero = phi_image == omega_zero;

    let mut proof_lifts_valid = true;
    let mut non_liftable_confirmed = true;
    for (k, p) in inst.pairs.iter().enumerate() {
        if omega_zero.binary_search(&k).is_ok() {
            let diff = transport(p, &g).sub(&g);
            let Some(w) = coboundary_witness(&inst.trivial, &diff)? else {
                proof_lifts_valid = false;
                continue;
            };
            let lambda = (0..inst.h.size()).map(|x| a.neg_index(w[p.phi[x]])).collect();
            let perm = LiftedAut { pair: p.clone(), lambda }.to_permutation(a);
            proof_lifts_valid &= preserves(&sum, &perm) && position(&perm).is_some();
        } else {
            non_liftable_confirmed &= inst.solve_lift(&g, p)?.is_none();
        }
    }

    Ok(GroupWellsCertificate {
        h_size: inst.h.size(),
        a_factors: a.invariant_factors().to_vec(),
        base,
        hom_order: homs.len(),
        aut_n_g_order: aut.len(),
        pairs_order: inst.pairs.len(),
        h2sym_order: inst.h2sym.order(),
        aut_n_g: aut,
        j_image,
        phi_kernel,
        phi_image,
        omega,
        omega_zero,
        j_injective,
        ker_phi_is_im_j,
        im_phi_is_omega_zero,
        proof_lifts_valid,
        non_liftable_confirmed,
    })
}

/// Square-by-square check of the map from the LCS sequence to the group sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonReport {
    /// `Z¹_N(X; A) ⊆ Hom((X,+), A)` and `ι(λ) = j(λ)`.
    pub z1_square: bool,
    /// `Aut_A(E) ⊆ Aut_N((E,+))` and `Φ(ψ) = Ψ(ψ)`.
    pub aut_square: bool,
    /// `Aut(X) ⊆ Aut((X,+))` on both factors.
    pub pairs_included: bool,
    /// `Λ(Θ(p)) = Ω(p)` for every pair.
    pub theta_square: bool,
    /// Pair indices where the `Θ` square fails.
    pub theta_failures: Vec<usize>,
}

impl ComparisonReport {
    pub fn commutes(&self) -> bool {
        self.z1_square && self.aut_square && self.pairs_included && self.theta_square
    }
}

pub fn comparison_diagram(inst: &WellsInstance, base: &[i64]) -> Result<ComparisonReport> {
    let a = &inst.a;
    let c = inst.h2.lift(base)?;
    let group = GroupWellsInstance::new(inst.x.carrier(), a)?;
    let sum = group.total_sum(&c);

    let mut z1_square = true;
    for k in inst.z1.all_coords() {
        let lambda = inst.z1.lift_map(&k);
        z1_square &= group.hom.contains_flat(&indices_to_flat(a, &lambda));
        let iota = super::lifts::iota(&inst.x, a, &lambda).map_err(Error::Property)?;
        let j = LiftedAut { pair: AutPair::identity(inst.x.size(), a), lambda };
        z1_square &= iota.to_permutation(a) == j.to_permutation(a);
    }

    let ext = crate::extension::build_extension(&inst.x, a, &c)?;
    let aut = super::lifts::enumerate_aut_a_e(inst, &c, ext.total())?;
    let group_perms: BTreeSet<Vec<usize>> = group.enumerate_aut_n_g(&c)?.iter().map(|l| l.to_permutation(a)).collect();
    let mut aut_square = true;
    for l in &aut {
        let perm = l.to_permutation(a);
        aut_square &= group_perms.contains(&perm) && preserves(&sum, &perm);
        // Φ reads the pair off the permutation itself.
        let phi: Vec<usize> = (0..inst.x.size()).map(|x| perm[pair_index(a.order(), x, 0)] / a.order()).collect();
        let shift: Vec<usize> = (0..inst.x.size()).map(|x| perm[pair_index(a.order(), x, 0)] % a.order()).collect();
        let theta_ok = (0..a.order()).all(|v| {
            let image = perm[pair_index(a.order(), 0, v)];
            image / a.order() == 0 && image % a.order() == a.add_index(shift[0], l.pair.theta_at(v))
        });
        aut_square &= phi == l.pair.phi && theta_ok && group.pair_index(&l.pair).is_some();
    }

    let pairs_included = inst.pairs.iter().all(|p| group.pair_index(p).is_some());

    let table = ActionTable::new(inst)?;
    let theta = table.theta(inst, inst.h2.structure().index(base));
    let g_base = group.h2sym.reduce(&c)?;
    let mut theta_failures = Vec::new();
    for (k, p) in inst.pairs.iter().enumerate() {
        let lhs = lambda_map(&inst.h2, &group.h2sym, &table.classes[theta[k]])?;
        if lhs != group.omega(&g_base, p)? {
            theta_failures.push(k);
        }
    }
    Ok(ComparisonReport { z1_square, aut_square, pairs_included, theta_square: theta_failures.is_empty(), theta_failures })
}
