//! Instances of the axiomatic equations between `WOu` arrows.

use std::fmt;

use super::Arrow;
use crate::addresses::NWord;
use crate::error::{Error, Result};
use crate::terms::Term;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomFamily {
    Ins1,
    Ins2,
    BetaNat,
    ThetaNat,
    BetaBeta,
    ThetaTheta,
    BetaPent,
    ThetaYB,
    BetaTheta1,
    BetaTheta2,
    MuNat,
    LambdaNat,
    MuMu,
    LambdaLambda,
    BetaMuLambda,
    ThetaMu,
}

impl AxiomFamily {
    pub const ALL: [AxiomFamily; 16] = [
        AxiomFamily::Ins1,
        AxiomFamily::Ins2,
        AxiomFamily::BetaNat,
        AxiomFamily::ThetaNat,
        AxiomFamily::BetaBeta,
        AxiomFamily::ThetaTheta,
        AxiomFamily::BetaPent,
        AxiomFamily::ThetaYB,
        AxiomFamily::BetaTheta1,
        AxiomFamily::BetaTheta2,
        AxiomFamily::MuNat,
        AxiomFamily::LambdaNat,
        AxiomFamily::MuMu,
        AxiomFamily::LambdaLambda,
        AxiomFamily::BetaMuLambda,
        AxiomFamily::ThetaMu,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AxiomFamily::Ins1 => "ins 1",
            AxiomFamily::Ins2 => "ins 2",
            AxiomFamily::BetaNat => "β nat",
            AxiomFamily::ThetaNat => "θ nat",
            AxiomFamily::BetaBeta => "ββ",
            AxiomFamily::ThetaTheta => "θθ",
            AxiomFamily::BetaPent => "β pent",
            AxiomFamily::ThetaYB => "θ YB",
            AxiomFamily::BetaTheta1 => "βθ1",
            AxiomFamily::BetaTheta2 => "βθ2",
            AxiomFamily::MuNat => "μ nat",
            AxiomFamily::LambdaNat => "λ nat",
            AxiomFamily::MuMu => "μμ",
            AxiomFamily::LambdaLambda => "λλ",
            AxiomFamily::BetaMuLambda => "βμλ",
            AxiomFamily::ThetaMu => "θμ",
        }
    }

    /// Whether the family involves units.
    pub fn is_unitary(self) -> bool {
        matches!(
            self,
            AxiomFamily::MuNat
                | AxiomFamily::LambdaNat
                | AxiomFamily::MuMu
                | AxiomFamily::LambdaLambda
                | AxiomFamily::BetaMuLambda
                | AxiomFamily::ThetaMu
        )
    }
}

impl fmt::Display for AxiomFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Both sides of one instance of an axiomatic equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equation {
    pub family: AxiomFamily,
    pub lhs: Arrow,
    pub rhs: Arrow,
}

impl Equation {
    fn new(family: AxiomFamily, lhs: Arrow, rhs: Arrow) -> Result<Equation> {
        if lhs.source() != rhs.source() || lhs.target() != rhs.target() {
            return Err(Error::TypeMismatch {
                path: Vec::new(),
                reason: format!("the two sides of {family} have different types"),
            });
        }
        Ok(Equation { family, lhs, rhs })
    }

    /// `1_g ∘ 1_f = 1_{g∘f}`.
    pub fn ins1(g: &Term, f: &Term) -> Result<Equation> {
        let lhs = Arrow::ins(&Arrow::id(g), &Arrow::id(f))?;
        let rhs = Arrow::id(&Term::insert(g, f)?);
        Equation::new(AxiomFamily::Ins1, lhs, rhs)
    }

    /// `(v2 ∘ v1) ins (u2 ∘ u1) = (v2 ins u2) ∘ (v1 ins u1)`.
    pub fn ins2(v2: &Arrow, v1: &Arrow, u2: &Arrow, u1: &Arrow) -> Result<Equation> {
        let lhs = Arrow::ins(&Arrow::comp(v2, v1)?, &Arrow::comp(u2, u1)?)?;
        let rhs = Arrow::comp(&Arrow::ins(v2, u2)?, &Arrow::ins(v1, u1)?)?;
        Equation::new(AxiomFamily::Ins2, lhs, rhs)
    }

    /// `β_{h2,g2,f2} ∘ ((w ins v) ins u) = (w ins (v ins u)) ∘ β_{h1,g1,f1}`.
    pub fn beta_nat(w: &Arrow, v: &Arrow, u: &Arrow) -> Result<Equation> {
        let b2 = Arrow::beta(w.target(), v.target(), u.target())?;
        let b1 = Arrow::beta(w.source(), v.source(), u.source())?;
        let lhs = Arrow::comp(&b2, &Arrow::ins(&Arrow::ins(w, v)?, u)?)?;
        let rhs = Arrow::comp(&Arrow::ins(w, &Arrow::ins(v, u)?)?, &b1)?;
        Equation::new(AxiomFamily::BetaNat, lhs, rhs)
    }

    /// `θ_{h2,g2,f2} ∘ ((w ins v) ins u) = ((w ins u) ins v) ∘ θ_{h1,g1,f1}`.
    pub fn theta_nat(w: &Arrow, v: &Arrow, u: &Arrow) -> Result<Equation> {
        let t2 = Arrow::theta(w.target(), v.target(), u.target())?;
        let t1 = Arrow::theta(w.source(), v.source(), u.source())?;
        let lhs = Arrow::comp(&t2, &Arrow::ins(&Arrow::ins(w, v)?, u)?)?;
        let rhs = Arrow::comp(&Arrow::ins(&Arrow::ins(w, u)?, v)?, &t1)?;
        Equation::new(AxiomFamily::ThetaNat, lhs, rhs)
    }

    /// `β⁻¹ ∘ β = 1` and `β ∘ β⁻¹ = 1`.
    pub fn beta_beta(h: &Term, g: &Term, f: &Term) -> Result<[Equation; 2]> {
        let b = Arrow::beta(h, g, f)?;
        let bi = Arrow::beta_inv(h, g, f)?;
        Ok([
            Equation::new(
                AxiomFamily::BetaBeta,
                Arrow::comp(&bi, &b)?,
                Arrow::id(b.source()),
            )?,
            Equation::new(
                AxiomFamily::BetaBeta,
                Arrow::comp(&b, &bi)?,
                Arrow::id(b.target()),
            )?,
        ])
    }

    /// `θ_{h,f,g} ∘ θ_{h,g,f} = 1`.
    pub fn theta_theta(h: &Term, g: &Term, f: &Term) -> Result<Equation> {
        let t = Arrow::theta(h, g, f)?;
        let back = Arrow::theta(h, f, g)?;
        Equation::new(
            AxiomFamily::ThetaTheta,
            Arrow::comp(&back, &t)?,
            Arrow::id(t.source()),
        )
    }

    pub fn beta_pent(j: &Term, h: &Term, g: &Term, f: &Term) -> Result<Equation> {
        let jh = Term::insert(j, h)?;
        let hg = Term::insert(h, g)?;
        let gf = Term::insert(g, f)?;
        let lhs = Arrow::chain(&[
            Arrow::ins(&Arrow::beta(j, h, g)?, &Arrow::id(f))?,
            Arrow::beta(j, &hg, f)?,
            Arrow::ins(&Arrow::id(j), &Arrow::beta(h, g, f)?)?,
        ])?;
        let rhs = Arrow::chain(&[Arrow::beta(&jh, g, f)?, Arrow::beta(j, h, &gf)?])?;
        Equation::new(AxiomFamily::BetaPent, lhs, rhs)
    }

    pub fn theta_yb(j: &Term, h: &Term, g: &Term, f: &Term) -> Result<Equation> {
        let jh = Term::insert(j, h)?;
        let jf = Term::insert(j, f)?;
        let jg = Term::insert(j, g)?;
        let lhs = Arrow::chain(&[
            Arrow::theta(&jh, g, f)?,
            Arrow::ins(&Arrow::theta(j, h, f)?, &Arrow::id(g))?,
            Arrow::theta(&jf, h, g)?,
        ])?;
        let rhs = Arrow::chain(&[
            Arrow::ins(&Arrow::theta(j, h, g)?, &Arrow::id(f))?,
            Arrow::theta(&jg, h, f)?,
            Arrow::ins(&Arrow::theta(j, g, f)?, &Arrow::id(h))?,
        ])?;
        Equation::new(AxiomFamily::ThetaYB, lhs, rhs)
    }

    pub fn beta_theta1(j: &Term, h: &Term, g: &Term, f: &Term) -> Result<Equation> {
        let jh = Term::insert(j, h)?;
        let hg = Term::insert(h, g)?;
        let hf = Term::insert(h, f)?;
        let lhs = Arrow::chain(&[
            Arrow::ins(&Arrow::beta(j, h, g)?, &Arrow::id(f))?,
            Arrow::beta(j, &hg, f)?,
            Arrow::ins(&Arrow::id(j), &Arrow::theta(h, g, f)?)?,
        ])?;
        let rhs = Arrow::chain(&[
            Arrow::theta(&jh, g, f)?,
            Arrow::ins(&Arrow::beta(j, h, f)?, &Arrow::id(g))?,
            Arrow::beta(j, &hf, g)?,
        ])?;
        Equation::new(AxiomFamily::BetaTheta1, lhs, rhs)
    }

    pub fn beta_theta2(j: &Term, h: &Term, g: &Term, f: &Term) -> Result<Equation> {
        let jh = Term::insert(j, h)?;
        let hg = Term::insert(h, g)?;
        let jf = Term::insert(j, f)?;
        let lhs = Arrow::chain(&[
            Arrow::ins(&Arrow::beta(j, h, g)?, &Arrow::id(f))?,
            Arrow::theta(j, &hg, f)?,
        ])?;
        let rhs = Arrow::chain(&[
            Arrow::theta(&jh, g, f)?,
            Arrow::ins(&Arrow::theta(j, h, f)?, &Arrow::id(g))?,
            Arrow::beta(&jf, h, g)?,
        ])?;
        Equation::new(AxiomFamily::BetaTheta2, lhs, rhs)
    }

    /// `μ_{f2,a} ∘ (u ins 1_{a·Ι}) = u ∘ μ_{f1,a}`.
    pub fn mu_nat(u: &Arrow, a: &NWord) -> Result<Equation> {
        let unit = Arrow::id(&Term::addr_unit(a.clone()));
        let lhs = Arrow::comp(&Arrow::mu(u.target(), a)?, &Arrow::ins(u, &unit)?)?;
        let rhs = Arrow::comp(u, &Arrow::mu(u.source(), a)?)?;
        Equation::new(AxiomFamily::MuNat, lhs, rhs)
    }

    /// `λ_{f2} ∘ (1_{t(f1)·Ι} ins u) = u ∘ λ_{f1}`.
    pub fn lambda_nat(u: &Arrow) -> Result<Equation> {
        let unit = Arrow::id(&Term::addr_unit(u.source().target().clone()));
        let lhs = Arrow::comp(&Arrow::lambda(u.target())?, &Arrow::ins(&unit, u)?)?;
        let rhs = Arrow::comp(u, &Arrow::lambda(u.source())?)?;
        Equation::new(AxiomFamily::LambdaNat, lhs, rhs)
    }

    pub fn mu_mu(f: &Term, a: &NWord) -> Result<[Equation; 2]> {
        let m = Arrow::mu(f, a)?;
        let mi = Arrow::mu_inv(f, a)?;
        Ok([
            Equation::new(
                AxiomFamily::MuMu,
                Arrow::comp(&mi, &m)?,
                Arrow::id(m.source()),
            )?,
            Equation::new(AxiomFamily::MuMu, Arrow::comp(&m, &mi)?, Arrow::id(f))?,
        ])
    }

    pub fn lambda_lambda(f: &Term) -> Result<[Equation; 2]> {
        let l = Arrow::lambda(f)?;
        let li = Arrow::lambda_inv(f)?;
        Ok([
            Equation::new(
                AxiomFamily::LambdaLambda,
                Arrow::comp(&li, &l)?,
                Arrow::id(l.source()),
            )?,
            Equation::new(
                AxiomFamily::LambdaLambda,
                Arrow::comp(&l, &li)?,
                Arrow::id(f),
            )?,
        ])
    }

    /// `β_{h,t(f)·Ι,f} = (1_h ins λ⁻¹_f) ∘ (μ_{h,t(f)} ins 1_f)`.
    pub fn beta_mu_lambda(h: &Term, f: &Term) -> Result<Equation> {
        let unit = Term::addr_unit(f.target().clone());
        let lhs = Arrow::beta(h, &unit, f)?;
        let rhs = Arrow::comp(
            &Arrow::ins(&Arrow::id(h), &Arrow::lambda_inv(f)?)?,
            &Arrow::ins(&Arrow::mu(h, f.target())?, &Arrow::id(f))?,
        )?;
        Equation::new(AxiomFamily::BetaMuLambda, lhs, rhs)
    }

    /// `θ_{h,b·Ι,f} = μ⁻¹_{h∘f,b} ∘ (μ_{h,b} ins 1_f)`.
    pub fn theta_mu(h: &Term, b: &NWord, f: &Term) -> Result<Equation> {
        let unit = Term::addr_unit(b.clone());
        let lhs = Arrow::theta(h, &unit, f)?;
        let hf = Term::insert(h, f)?;
        let rhs = Arrow::comp(
            &Arrow::mu_inv(&hf, b)?,
            &Arrow::ins(&Arrow::mu(h, b)?, &Arrow::id(f))?,
        )?;
        Equation::new(AxiomFamily::ThetaMu, lhs, rhs)
    }
}
