//! JSON renderings of library results. Keys are emitted in sorted order, so
//! identical inputs give byte-identical reports.

use cslab_core::abelian::FinAbGroup;
use cslab_core::dynamical::DynamicalReport;
use cslab_core::wells::{
    ComparisonReport, GroupWellsCertificate, LiftedAut, OrbitReport, ThetaReport, WellsCertificate,
};
use cslab_core::{Failure, Verdict};
use serde_json::{json, Value};

use crate::json::elements;

pub fn failure(f: &Failure) -> Value {
    json!({ "law": f.law.name(), "witness": f.witness })
}

pub fn verdict(v: &Verdict) -> Value {
    match v {
        Ok(()) => json!("pass"),
        Err(f) => json!({ "fail": failure(f) }),
    }
}

pub fn lifted(l: &LiftedAut, a: &FinAbGroup) -> Value {
    json!({
        "phi": l.pair.phi,
        "theta": l.pair.theta_permutation(),
        "lambda": elements(a, &l.lambda),
    })
}

pub fn wells_certificate(c: &WellsCertificate, a: &FinAbGroup) -> Value {
    json!({
        "valid": c.is_valid(),
        "x_size": c.x_size,
        "a_factors": c.a_factors,
        "base": c.base,
        "orders": {
            "z1": c.z1_order,
            "aut_a_e": c.aut_a_e_order,
            "pairs": c.pairs_order,
            "h2": c.h2_order,
        },
        "aut_a_e": c.aut_a_e.iter().map(|l| lifted(l, a)).collect::<Vec<_>>(),
        "iota_image": c.iota_image,
        "psi_kernel": c.psi_kernel,
        "psi_image": c.psi_image,
        "theta": c.theta,
        "theta_zero": c.theta_zero,
        "proof_lifts": c.proof_lifts.iter().map(|l| lifted(l, a)).collect::<Vec<_>>(),
        "checks": {
            "iota_injective": c.iota_injective,
            "iota_homomorphism": c.iota_homomorphism,
            "ker_psi_is_im_iota": c.ker_psi_is_im_iota,
            "im_psi_is_theta_zero": c.im_psi_is_theta_zero,
            "proof_lifts_valid": c.proof_lifts_valid,
            "non_liftable_confirmed": c.non_liftable_confirmed,
            "theta_cocycle": c.theta_cocycle,
        },
    })
}

pub fn group_wells_certificate(c: &GroupWellsCertificate, a: &FinAbGroup) -> Value {
    json!({
        "valid": c.is_valid(),
        "h_size": c.h_size,
        "a_factors": c.a_factors,
        "base": c.base,
        "orders": {
            "hom": c.hom_order,
            "aut_n_g": c.aut_n_g_order,
            "pairs": c.pairs_order,
            "h2sym": c.h2sym_order,
        },
        "aut_n_g": c.aut_n_g.iter().map(|l| lifted(l, a)).collect::<Vec<_>>(),
        "j_image": c.j_image,
        "phi_kernel": c.phi_kernel,
        "phi_image": c.phi_image,
        "omega": c.omega,
        "omega_zero": c.omega_zero,
        "checks": {
            "j_injective": c.j_injective,
            "ker_phi_is_im_j": c.ker_phi_is_im_j,
            "im_phi_is_omega_zero": c.im_phi_is_omega_zero,
            "proof_lifts_valid": c.proof_lifts_valid,
            "non_liftable_confirmed": c.non_liftable_confirmed,
        },
    })
}

pub fn theta_report(t: &ThetaReport) -> Value {
    let cocycle_law = match t.cocycle_law {
        Ok(()) => json!("pass"),
        Err((p, q)) => json!({ "fail": [p, q] }),
    };
    json!({
        "holds": t.holds(),
        "cocycle_law": cocycle_law,
        "action_by_automorphisms": t.action_by_automorphisms,
        "semidirect_action": t.semidirect_action,
        "stabiliser_is_complement": t.stabiliser_is_complement,
    })
}

pub fn orbit_report(o: &OrbitReport) -> Value {
    json!({
        "base": o.base,
        "orbit": o.orbit,
        "orbit_size": o.orbit.len(),
        "stabiliser": o.stabiliser,
        "pairs_order": o.pairs_order,
        "h2_order": o.h2_order,
        "orbit_stabiliser": o.orbit_stabiliser,
        "bound": o.bound,
    })
}

pub fn comparison(c: &ComparisonReport) -> Value {
    json!({
        "commutes": c.commutes(),
        "z1_square": c.z1_square,
        "aut_square": c.aut_square,
        "pairs_included": c.pairs_included,
        "theta_square": c.theta_square,
        "theta_failures": c.theta_failures,
    })
}

pub fn dynamical(d: &DynamicalReport) -> Value {
    json!({
        "conditions": verdict(&d.conditions),
        "product": verdict(&d.product),
        "agree": d.agree(),
        "verdict": verdict(&d.verdict()),
    })
}
