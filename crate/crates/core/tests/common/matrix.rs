//! Honest runs and the single-component tamper matrix for all five schemes.

use braidsig::braid::NormalForm;
use braidsig::schemes::*;

use super::{flip, sigma1, warrant_flips, World};

pub struct Case {
    pub scheme: &'static str,
    pub label: String,
    pub outcome: VerifyOutcome,
}

fn case(scheme: &'static str, label: impl Into<String>, outcome: VerifyOutcome) -> Case {
    Case { scheme, label: label.into(), outcome }
}

fn times_s1(x: &NormalForm) -> NormalForm {
    x.mul(&sigma1(x.n()))
}

/// Verifier outcomes of one honest signature per scheme (both recipients for the
/// bi-designated ones).
pub fn honest(w: &World) -> Vec<Case> {
    let sp = &w.sp;
    let mut out = Vec::new();
    let sig = proxy_sign_with(&w.pkey, &w.bob, w.alice.public(), sp, &w.b).unwrap();
    out.push(case("proxy", "honest", proxy_verify(&sig, w.alice.public(), w.bob.public(), w.now, sp)));
    let sig = dvs_sign_with(&w.alice, w.cindy.public(), &w.message(), sp, &w.b).unwrap();
    out.push(case("dvs", "honest", dvs_verify(&sig, &w.cindy, w.alice.public(), sp)));
    let (s1, s2) = bidvs_sign_with(&w.alice, w.cindy.public(), w.trevor.public(), &w.message(), sp, &w.b).unwrap();
    out.push(case("bidvs", "honest σ_1", bidvs_verify(&s1, &w.cindy, w.alice.public(), sp)));
    out.push(case("bidvs", "honest σ_2", bidvs_verify(&s2, &w.trevor, w.alice.public(), sp)));
    let sig = dvps_sign_with(&w.pkey, &w.bob, w.cindy.public(), sp, &w.b).unwrap();
    out.push(case("dvps", "honest", dvps_verify(&sig, &w.cindy, w.bob.public(), w.now, sp)));
    let (s1, s2) = bidvps_sign_with(&w.pkey, &w.bob, w.cindy.public(), w.trevor.public(), sp, &w.b).unwrap();
    out.push(case("bidvps", "honest σ_1", bidvps_verify(&s1, &w.cindy, w.bob.public(), w.now, sp)));
    out.push(case("bidvps", "honest σ_2", bidvps_verify(&s2, &w.trevor, w.bob.public(), w.now, sp)));
    out
}

/// Every tampered variant. None of them may be accepted.
pub fn tampered(w: &World) -> Vec<Case> {
    let mut out = Vec::new();
    proxy_cases(w, &mut out);
    dvs_cases(w, &mut out);
    bidvs_cases(w, &mut out);
    dvps_cases(w, &mut out);
    bidvps_cases(w, &mut out);
    out
}

fn expired(w: &World) -> u64 {
    w.pkey.delegation.warrant.valid_to + 1
}

fn proxy_cases(w: &World, out: &mut Vec<Case>) {
    let sp = &w.sp;
    let sig = proxy_sign_with(&w.pkey, &w.bob, w.alice.public(), sp, &w.b).unwrap();
    let verify = |s: &ProxySignature| proxy_verify(s, w.alice.public(), w.bob.public(), w.now, sp);
    let fields: [(&str, fn(&mut ProxySignature) -> &mut NormalForm); 4] = [
        ("γ·σ_1", |s| &mut s.gamma),
        ("δ·σ_1", |s| &mut s.delta),
        ("θ·σ_1", |s| &mut s.theta),
        ("t_o·σ_1", |s| &mut s.t_o),
    ];
    for (label, field) in fields {
        let mut t = sig.clone();
        let x = field(&mut t);
        *x = times_s1(x);
        out.push(case("proxy", label, verify(&t)));
    }
    for (label, warrant) in warrant_flips(&sig.warrant) {
        let mut t = sig.clone();
        t.warrant = warrant;
        out.push(case("proxy", label, verify(&t)));
    }
    out.push(case("proxy", "wrong proxy key", proxy_verify(&sig, w.alice.public(), w.cindy.public(), w.now, sp)));
    out.push(case("proxy", "wrong original signer", proxy_verify(&sig, w.cindy.public(), w.bob.public(), w.now, sp)));
    out.push(case("proxy", "expired warrant", proxy_verify(&sig, w.alice.public(), w.bob.public(), expired(w), sp)));
}

fn dvs_cases(w: &World, out: &mut Vec<Case>) {
    let sp = &w.sp;
    let sig = dvs_sign_with(&w.alice, w.cindy.public(), &w.message(), sp, &w.b).unwrap();
    let verify = |s: &DvsSignature| dvs_verify(s, &w.cindy, w.alice.public(), sp);
    let mut t = sig.clone();
    t.alpha = times_s1(&t.alpha);
    out.push(case("dvs", "α·σ_1", verify(&t)));
    let mut t = sig.clone();
    t.delta = times_s1(&t.delta);
    out.push(case("dvs", "δ·σ_1", verify(&t)));
    let mut t = sig.clone();
    t.message = flip(&t.message, 5);
    out.push(case("dvs", "message bit", verify(&t)));
    out.push(case("dvs", "wrong verifier", dvs_verify(&sig, &w.trevor, w.alice.public(), sp)));
    out.push(case("dvs", "wrong signer", dvs_verify(&sig, &w.cindy, w.bob.public(), sp)));
}

fn bidvs_cases(w: &World, out: &mut Vec<Case>) {
    let sp = &w.sp;
    let (s1, s2) = bidvs_sign_with(&w.alice, w.cindy.public(), w.trevor.public(), &w.message(), sp, &w.b).unwrap();
    for (sig, me, other) in [(&s1, &w.cindy, &w.trevor), (&s2, &w.trevor, &w.cindy)] {
        let tag = if sig.recipient == Recipient::First { "σ_1" } else { "σ_2" };
        let verify = |s: &BiDvsSignature| bidvs_verify(s, me, w.alice.public(), sp);
        let fields: [(&str, fn(&mut BiDvsSignature) -> &mut NormalForm); 3] = [
            ("α_own·σ_1", |s| &mut s.alpha_own),
            ("β_other·σ_1", |s| &mut s.beta_other),
            ("δ·σ_1", |s| &mut s.delta),
        ];
        for (label, field) in fields {
            let mut t = sig.clone();
            let x = field(&mut t);
            *x = times_s1(x);
            out.push(case("bidvs", format!("{tag} {label}"), verify(&t)));
        }
        let mut t = sig.clone();
        t.message = flip(&t.message, 11);
        out.push(case("bidvs", format!("{tag} message bit"), verify(&t)));
        let mut t = sig.clone();
        t.recipient = if t.recipient == Recipient::First { Recipient::Second } else { Recipient::First };
        out.push(case("bidvs", format!("{tag} recipient flag swapped"), verify(&t)));
        out.push(case("bidvs", format!("{tag} wrong recipient"), bidvs_verify(sig, other, w.alice.public(), sp)));
        out.push(case("bidvs", format!("{tag} wrong verifier"), bidvs_verify(sig, &w.bob, w.alice.public(), sp)));
    }
}

fn dvps_cases(w: &World, out: &mut Vec<Case>) {
    let sp = &w.sp;
    let sig = dvps_sign_with(&w.pkey, &w.bob, w.cindy.public(), sp, &w.b).unwrap();
    let verify = |s: &DvpsSignature| dvps_verify(s, &w.cindy, w.bob.public(), w.now, sp);
    let fields: [(&str, fn(&mut DvpsSignature) -> &mut NormalForm); 5] = [
        ("α·σ_1", |s| &mut s.alpha),
        ("γ·σ_1", |s| &mut s.gamma),
        ("δ·σ_1", |s| &mut s.delta),
        ("θ·σ_1", |s| &mut s.theta),
        ("t_o·σ_1", |s| &mut s.t_o),
    ];
    for (label, field) in fields {
        let mut t = sig.clone();
        let x = field(&mut t);
        *x = times_s1(x);
        out.push(case("dvps", label, verify(&t)));
    }
    for (label, warrant) in warrant_flips(&sig.warrant) {
        let mut t = sig.clone();
        t.warrant = warrant;
        out.push(case("dvps", label, verify(&t)));
    }
    out.push(case("dvps", "wrong verifier", dvps_verify(&sig, &w.trevor, w.bob.public(), w.now, sp)));
    out.push(case("dvps", "wrong proxy key", dvps_verify(&sig, &w.cindy, w.alice.public(), w.now, sp)));
    out.push(case("dvps", "expired warrant", dvps_verify(&sig, &w.cindy, w.bob.public(), expired(w), sp)));
}

fn bidvps_cases(w: &World, out: &mut Vec<Case>) {
    let sp = &w.sp;
    let (s1, s2) = bidvps_sign_with(&w.pkey, &w.bob, w.cindy.public(), w.trevor.public(), sp, &w.b).unwrap();
    for (sig, me, other) in [(&s1, &w.cindy, &w.trevor), (&s2, &w.trevor, &w.cindy)] {
        let tag = if sig.recipient == Recipient::First { "σ_1" } else { "σ_2" };
        let verify = |s: &BiDvpsSignature| bidvps_verify(s, me, w.bob.public(), w.now, sp);
        let fields: [(&str, fn(&mut BiDvpsSignature) -> &mut NormalForm); 6] = [
            ("α_own·σ_1", |s| &mut s.alpha_own),
            ("β_other·σ_1", |s| &mut s.beta_other),
            ("γ·σ_1", |s| &mut s.gamma),
            ("δ·σ_1", |s| &mut s.delta),
            ("θ·σ_1", |s| &mut s.theta),
            ("t_o·σ_1", |s| &mut s.t_o),
        ];
        for (label, field) in fields {
            let mut t = sig.clone();
            let x = field(&mut t);
            *x = times_s1(x);
            out.push(case("bidvps", format!("{tag} {label}"), verify(&t)));
        }
        let mut t = sig.clone();
        t.message = flip(&t.message, 2);
        out.push(case("bidvps", format!("{tag} message bit"), verify(&t)));
        for (label, warrant) in warrant_flips(&sig.warrant) {
            let mut t = sig.clone();
            t.warrant = warrant;
            out.push(case("bidvps", format!("{tag} {label}"), verify(&t)));
        }
        // keep message and scope consistent so the braid checks are what rejects
        let mut t = sig.clone();
        t.warrant.message_scope = flip(&t.warrant.message_scope, 1);
        t.message = t.warrant.message_scope.clone();
        out.push(case("bidvps", format!("{tag} message+scope bit"), verify(&t)));
        let mut t = sig.clone();
        t.recipient = if t.recipient == Recipient::First { Recipient::Second } else { Recipient::First };
        out.push(case("bidvps", format!("{tag} recipient flag swapped"), verify(&t)));
        out.push(case("bidvps", format!("{tag} wrong recipient"), bidvps_verify(sig, other, w.bob.public(), w.now, sp)));
        out.push(case("bidvps", format!("{tag} wrong verifier"), bidvps_verify(sig, &w.alice, w.bob.public(), w.now, sp)));
        out.push(case("bidvps", format!("{tag} expired warrant"), bidvps_verify(sig, me, w.bob.public(), expired(w), sp)));
    }
}
