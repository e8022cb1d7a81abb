//! Request documents and their handlers.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use twisted_k3::json::{
    ints, int_matrix_from, int_rows, unints, unrats, BFieldJson, HilbertJson, IsometryJson,
    JsonInt, JsonRat, LatticeJson, MukaiJson, ReportJson, SignatureJson, SublatticeJson,
    WallJson, WallQueryJson, WallsJson, WitnessJson,
};
use twisted_k3::{
    adjoint_check, algebraic_beauville, beauville_lattice, brauer_equivalent, brauer_order,
    compose, exp_twist, is_general, is_mukai_vector, moduli_report, mukai, mukai_pairing,
    same_chamber, stability, strong_generality, theta_projection, twist_comparison_isometry,
    wall_bound, walls_between, BField, BrauerWitness, Error, Lattice, MukaiVector, Polarization,
    SurfaceKind, WallQuery,
};

pub enum Failure {
    Io(String),
    Json(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Outcome = Result<Value, Failure>;

fn parse<T: DeserializeOwned>(text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Json(e.to_string()))
}

fn value<T: Serialize>(x: T) -> Outcome {
    Ok(serde_json::to_value(x).expect("serializable"))
}

pub fn run(name: &str, text: &str, surface: SurfaceKind) -> Outcome {
    match name {
        "pairing" => pairing(parse(text)?),
        "twist" => twist(parse(text)?),
        "chern" => chern(parse(text)?, surface),
        "untwist" => untwist(parse(text)?),
        "primitive" => primitive(parse(text)?),
        "c2-residue" => c2_residue(parse(text)?),
        "extension-defect" => extension_defect(parse(text)?),
        "bogomolov" => bogomolov(parse(text)?),
        "stability-compare" => stability_compare(parse(text)?),
        "brauer-order" => brauer_order_cmd(parse(text)?),
        "brauer-equiv" => brauer_equiv(parse(text)?),
        "twist-square" => twist_square(parse(text)?),
        "mukai-check" => mukai_check(parse(text)?),
        "wall-bound" => wall_bound_cmd(parse(text)?),
        "general" => general(parse(text)?),
        "walls-between" => walls_between_cmd(parse(text)?),
        "same-chamber" => same_chamber_cmd(parse(text)?),
        "strong-general" => strong_general(parse(text)?),
        "moduli" => moduli(parse(text)?),
        "beauville" => beauville(parse(text)?),
        "algebraic-beauville" => algebraic_beauville_cmd(parse(text)?),
        "complement" => complement(parse(text)?),
        "discriminant" => discriminant(parse(text)?),
        "signature" => signature(parse(text)?),
        "theta" => theta(parse(text)?),
        "compose" => compose_cmd(parse(text)?),
        "adjoint-check" => adjoint(parse(text)?),
        "lattice" => lattice(parse(text)?),
        other => unreachable!("unknown subcommand {other}"),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PairingReq {
    h2: LatticeJson,
    v: MukaiJson,
    w: MukaiJson,
}

fn pairing(req: PairingReq) -> Outcome {
    let h2 = req.h2.to_lattice()?;
    let p = mukai_pairing(&(&req.v).into(), &(&req.w).into(), &h2)?;
    value(JsonRat(p))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TwistReq {
    h2: LatticeJson,
    v: MukaiJson,
    #[serde(rename = "B")]
    b: Vec<JsonRat>,
}

fn twist(req: TwistReq) -> Outcome {
    let h2 = req.h2.to_lattice()?;
    let out = exp_twist(&(&req.v).into(), &unrats(&req.b), &h2)?;
    value(MukaiJson::from(&out))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ChernReq {
    h2: LatticeJson,
    r: JsonInt,
    c1: Vec<JsonInt>,
    c2: JsonInt,
}

fn chern(req: ChernReq, surface: SurfaceKind) -> Outcome {
    let h2 = req.h2.to_lattice()?;
    let v = mukai::mukai_from_chern(&req.r.0, &unints(&req.c1), &req.c2.0, &h2, surface)?;
    value(MukaiJson::from(&v))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct UntwistReq {
    h2: LatticeJson,
    v: MukaiJson,
    b: BFieldJson,
}

fn untwist(req: UntwistReq) -> Outcome {
    let h2 = req.h2.to_lattice()?;
    let u = mukai::untwist(&(&req.v).into(), &req.b.to_bfield()?, &h2)?;
    Ok(json!({
        "vector": MukaiJson::from(&u.vector),
        "w_class": u.w_class.as_deref().map(ints),
        "is_integral": u.is_integral,
    }))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PrimitiveReq {
    v: MukaiJson,
}

fn primitive(req: PrimitiveReq) -> Outcome {
    let (p, m) = mukai::primitive_part(&(&req.v).into())?;
    Ok(json!({"vector": MukaiJson::from(&p), "multiplicity": JsonInt(m)}))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ResidueReq {
    h2: LatticeJson,
    r: JsonInt,
    w: Vec<JsonInt>,
}

fn c2_residue(req: ResidueReq) -> Outcome {
    let h2 = req.h2.to_lattice()?;
    value(JsonInt(mukai::expected_c2_residue(&req.r.0, &unints(&req.w), &h2)?))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ExtensionReq {
    h2: LatticeJson,
    v1: MukaiJson,
    v2: MukaiJson,
    l1: JsonInt,
    l2: JsonInt,
    #[serde(rename = "vF1")]
    vf1: MukaiJson,
    #[serde(rename = "vF2")]
    vf2: MukaiJson,
}

fn extension_defect(req: ExtensionReq) -> Outcome {
    let h2 = req.h2.to_lattice()?;
    let d = mukai::extension_defect(
        &(&req.v1).into(),
        &(&req.v2).into(),
        &req.l1.0,
        &req.l2.0,
        &(&req.vf1).into(),
        &(&req.vf2).into(),
        &h2,
    )?;
    value(JsonRat(d))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BogomolovReq {
    h2: LatticeJson,
    v: MukaiJson,
    l: JsonInt,
}

fn bogomolov(req: BogomolovReq) -> Outcome {
    let h2 = req.h2.to_lattice()?;
    value(mukai::bogomolov_check(&(&req.v).into(), &req.l.0, &h2)?)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StabilityReq {
    f: HilbertJson,
    e: HilbertJson,
    #[serde(default)]
    lambda: Option<JsonRat>,
}

fn stability_compare(req: StabilityReq) -> Outcome {
    let f = req.f.to_coeffs()?;
    let e = req.e.to_coeffs()?;
    let ord = match &req.lambda {
        None => stability::stability_compare(&f, &e)?,
        Some(l) => stability::type_lambda_compare(&f, &e, &l.0)?,
    };
    value(match ord {
        std::cmp::Ordering::Less => "less",
        std::cmp::Ordering::Equal => "equal",
        std::cmp::Ordering::Greater => "greater",
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BrauerReq {
    b: BFieldJson,
    ns: SublatticeJson,
}

fn brauer_order_cmd(req: BrauerReq) -> Outcome {
    value(JsonInt(brauer_order(&req.b.to_bfield()?, &req.ns.to_sublattice()?)?))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BrauerPairReq {
    b: BFieldJson,
    b2: BFieldJson,
    ns: SublatticeJson,
    #[serde(default)]
    witness: Option<WitnessJson>,
}

fn brauer_equiv(req: BrauerPairReq) -> Outcome {
    let w = brauer_equivalent(&req.b.to_bfield()?, &req.b2.to_bfield()?, &req.ns.to_sublattice()?)?;
    Ok(json!({"equivalent": w.is_some(), "witness": w.as_ref().map(WitnessJson::from)}))
}

fn twist_square(req: BrauerPairReq) -> Outcome {
    let b = req.b.to_bfield()?;
    let b2 = req.b2.to_bfield()?;
    let ns = req.ns.to_sublattice()?;
    let w: BrauerWitness = match &req.witness {
        Some(w) => w.into(),
        None => brauer_equivalent(&b, &b2, &ns)?.ok_or(Error::InvalidWitness)?,
    };
    let sq = twist_comparison_isometry(&b, &b2, &w, &ns)?;
    Ok(json!({
        "witness": WitnessJson::from(&w),
        "lattice_map": IsometryJson::from(&sq.lattice_map),
        "twist_map": IsometryJson::from(&sq.twist_map),
    }))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MukaiCheckReq {
    v: MukaiJson,
    b: BFieldJson,
    ns: SublatticeJson,
}

fn mukai_check(req: MukaiCheckReq) -> Outcome {
    let c = is_mukai_vector(&(&req.v).into(), &req.b.to_bfield()?, &req.ns.to_sublattice()?)?;
    Ok(json!({"valid": c.valid, "primitive": c.primitive}))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BoundReq {
    ns: LatticeJson,
    v: MukaiJson,
    r0: JsonInt,
}

fn wall_bound_cmd(req: BoundReq) -> Outcome {
    let ns = req.ns.to_lattice()?;
    value(JsonRat(wall_bound(&(&req.v).into(), &req.r0.0, &ns)?))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PointReq {
    ns: LatticeJson,
    v: MukaiJson,
    r0: JsonInt,
    #[serde(rename = "H")]
    h: Vec<JsonInt>,
}

impl PointReq {
    fn query(&self) -> Result<(WallQuery, Vec<twisted_k3::Int>), Failure> {
        let h = unints(&self.h);
        let q = WallQuery::at(self.ns.to_lattice()?, (&self.v).into(), self.r0.0.clone(), h.clone());
        Ok((q, h))
    }
}

fn general(req: PointReq) -> Outcome {
    let (q, h) = req.query()?;
    let g = is_general(&h, &q)?;
    let witnesses: Vec<WallJson> = g.witnesses.iter().map(WallJson::from).collect();
    Ok(json!({"general": g.general, "witnesses": witnesses}))
}

fn strong_general(req: PointReq) -> Outcome {
    let (q, h) = req.query()?;
    let s = strong_generality(&h, &q)?;
    Ok(json!({"holds": s.holds, "min_norm": s.min_norm.map(JsonInt)}))
}

fn walls_between_cmd(req: WallQueryJson) -> Outcome {
    let q = req.to_query()?;
    let walls = walls_between(&q)?;
    value(WallsJson {
        bound: JsonRat(q.bound()?),
        walls: walls.iter().map(WallJson::from).collect(),
    })
}

fn same_chamber_cmd(req: WallQueryJson) -> Outcome {
    value(same_chamber(&req.to_query()?)?)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ModuliReq {
    v: MukaiJson,
    ns: SublatticeJson,
    #[serde(default)]
    b: Option<BFieldJson>,
    #[serde(default, rename = "H")]
    h: Option<Vec<JsonInt>>,
    #[serde(default)]
    assume_general: bool,
}

fn moduli(req: ModuliReq) -> Outcome {
    let ns = req.ns.to_sublattice()?;
    let b = match &req.b {
        Some(b) => b.to_bfield()?,
        None => BField::trivial(ns.ambient().rank()),
    };
    let h = req.h.as_deref().map(unints);
    let pol = match (&h, req.assume_general) {
        (_, true) => Polarization::AssumeGeneral,
        (Some(h), false) => Polarization::Check(h),
        (None, false) => {
            return Err(Failure::Json("moduli needs \"H\" or \"assume_general\": true".into()));
        }
    };
    let report = moduli_report(&(&req.v).into(), &b, &ns, pol)?;
    value(ReportJson::from(&report))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct VectorInLatticeReq {
    v: MukaiJson,
    ambient: LatticeJson,
}

impl VectorInLatticeReq {
    fn parts(&self) -> Result<(Vec<twisted_k3::Int>, Lattice), Failure> {
        let v: MukaiVector = (&self.v).into();
        let coords = v.integral_coords().ok_or(Error::NotIntegral)?;
        Ok((coords, self.ambient.to_lattice()?))
    }
}

fn beauville(req: VectorInLatticeReq) -> Outcome {
    let (v, ambient) = req.parts()?;
    value(LatticeJson::from_lattice(&beauville_lattice(&v, &ambient)?))
}

fn algebraic_beauville_cmd(req: MukaiCheckReq) -> Outcome {
    let l = algebraic_beauville(&(&req.v).into(), &req.b.to_bfield()?, &req.ns.to_sublattice()?)?;
    value(LatticeJson::from_lattice(&l))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplementReq {
    lattice: LatticeJson,
    vectors: Vec<Vec<JsonInt>>,
}

fn complement(req: ComplementReq) -> Outcome {
    let l = req.lattice.to_lattice()?;
    let vs = int_matrix_from(&req.vectors, Some(l.rank()))?;
    let basis = l.orthogonal_complement(&vs)?;
    Ok(json!({"basis": int_rows(&basis), "gram": int_rows(&l.gram().congruent(&basis))}))
}

fn discriminant(req: LatticeJson) -> Outcome {
    value(ints(&req.to_lattice()?.discriminant_group()?))
}

fn signature(req: LatticeJson) -> Outcome {
    value(SignatureJson::from(req.to_lattice()?.signature()))
}

fn theta(req: VectorInLatticeReq) -> Outcome {
    let (v, ambient) = req.parts()?;
    let t = theta_projection(&v, &ambient)?;
    Ok(json!({
        "quotient": LatticeJson::from_lattice(&t.quotient),
        "perp_basis": int_rows(&t.perp_basis),
        "proj": int_rows(&t.proj),
    }))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ComposeReq {
    g: IsometryJson,
    f: IsometryJson,
}

fn compose_cmd(req: ComposeReq) -> Outcome {
    let c = compose(&req.g.to_isometry()?, &req.f.to_isometry()?)?;
    value(IsometryJson::from(&c))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AdjointReq {
    psi: IsometryJson,
    psi_dual: IsometryJson,
}

fn adjoint(req: AdjointReq) -> Outcome {
    value(adjoint_check(&req.psi.to_isometry()?, &req.psi_dual.to_isometry()?))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields, tag = "kind")]
enum LatticeReq {
    #[serde(rename = "K3")]
    K3,
    #[serde(rename = "Mukai")]
    Mukai,
    #[serde(rename = "U")]
    U,
    #[serde(rename = "E8-")]
    E8,
    #[serde(rename = "rank_one")]
    RankOne { n: JsonInt },
    #[serde(rename = "mukai_over")]
    MukaiOver { h2: LatticeJson },
    #[serde(rename = "sum")]
    Sum { parts: Vec<LatticeJson> },
}

fn lattice(req: LatticeReq) -> Outcome {
    let l = match req {
        LatticeReq::K3 => Lattice::k3(),
        LatticeReq::Mukai => Lattice::mukai(),
        LatticeReq::U => Lattice::hyperbolic_plane(),
        LatticeReq::E8 => Lattice::e8_negative(),
        LatticeReq::RankOne { n } => Lattice::rank_one(n.0),
        LatticeReq::MukaiOver { h2 } => Lattice::mukai_over(&h2.to_lattice()?),
        LatticeReq::Sum { parts } => {
            let mut acc = Lattice::empty();
            for p in &parts {
                acc = acc.direct_sum(&p.to_lattice()?);
            }
            acc
        }
    };
    let disc = l.discriminant_group().ok();
    Ok(json!({
        "lattice": LatticeJson::from_lattice(&l),
        "rank": l.rank(),
        "signature": SignatureJson::from(l.signature()),
        "even": l.is_even(),
        "unimodular": l.is_unimodular(),
        "discriminant": disc.as_deref().map(ints),
    }))
}

