use std::collections::BTreeMap;
use std::sync::Arc;

use eqindex::invertible::{milnor_data, DiagonalGroup, InvertiblePolynomial};
use eqindex::json::{resolve_class, resolve_subgroup, BurnsideJson, ComplexJson, PresentationJson, RationalJson};
use eqindex::{
    barycentric_subdivide, chi_G_simplicial, chi_G_stratified, chi_G_stratified_reduced, chi_k_direct, duality_check,
    fixed_indices_from_index, gsv_assemble_from_dims, gsv_from_radial, index_from_fixed_indices,
    index_from_fixed_indices_conj, index_from_fixed_indices_sub, index_from_strata, induce_orbit_index,
    poincare_hopf_check, symmetry_group, Burnside, Error, FixedSetIndexData, GsvDimensions, SingularOrbitDatum,
    StratifiedGData, StratumIndexData, SubgroupLattice,
};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::{BurnsideCommand, Command, EulerCommand, GroupCommand, IndexCommand, PolyCommand};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub kind: String,
    pub message: String,
    pub path: Option<String>,
}

impl CliError {
    pub fn new(kind: &str, message: impl Into<String>) -> Self {
        CliError {
            kind: kind.into(),
            message: message.into(),
            path: None,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut e = json!({"kind": self.kind, "message": self.message});
        if let Some(p) = &self.path {
            e["path"] = json!(p);
        }
        json!({ "error": e })
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::OrderBound { .. } => "order_bound",
        Error::SizeBound(_) => "size_bound",
        Error::NonInvertibleGenerator { .. } => "non_invertible_generator",
        Error::InvalidPresentation(_) => "invalid_presentation",
        Error::NotASubgroup(_) => "not_a_subgroup",
        Error::UnknownLabel(_) => "unknown_label",
        Error::GroupMismatch { .. } => "group_mismatch",
        Error::NonIntegral(_) => "non_integral",
        Error::Inconsistent(_) => "inconsistent",
        Error::BoundExceeded(_) => "bound_exceeded",
        Error::NotRegular(_) => "not_regular",
        Error::InvalidComplex(_) => "invalid_complex",
        Error::MissingDimension(_) => "missing_dimension",
        Error::SingularMatrix => "singular_matrix",
        Error::InvalidMatrix(_) => "invalid_matrix",
        Error::NotASymmetry(_) => "not_a_symmetry",
        Error::DegeneratePairing(_) => "degenerate_pairing",
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::new(error_kind(&e), e.to_string())
    }
}

type Out = Result<Value, CliError>;

fn parse<T: DeserializeOwned>(v: &Value) -> Result<T, CliError> {
    serde_path_to_error::deserialize(v).map_err(|e| {
        let path = e.path().to_string();
        CliError {
            kind: "malformed_json".into(),
            message: e.into_inner().to_string(),
            path: Some(if path == "." { String::new() } else { path }),
        }
    })
}

fn element_json(b: &Burnside) -> Value {
    serde_json::to_value(BurnsideJson::from_element(b)).expect("serializable")
}

fn labelled<T: Into<Value> + Copy>(l: &SubgroupLattice, values: &[T]) -> Value {
    let map: BTreeMap<String, Value> = l.ids().map(|h| (l.label(h), values[h.0].into())).collect();
    json!(map)
}

fn class_labelled<T: Into<Value> + Copy>(l: &SubgroupLattice, values: &[T]) -> Value {
    let map: BTreeMap<String, Value> = l.class_ids().map(|c| (l.class_label(c), values[c.0].into())).collect();
    json!(map)
}

pub fn dispatch(command: &Command, input: &Value) -> Out {
    match command {
        Command::Group(c) => group(c, input),
        Command::Burnside(c) => burnside(c, input),
        Command::Euler(c) => euler(c, input),
        Command::Index(c) => index(c, input),
        Command::Poly(c) => poly(c, input),
    }
}

// --- group ---------------------------------------------------------------

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupInput {
    group: PresentationJson,
}

fn group(c: &GroupCommand, input: &Value) -> Out {
    let l = parse::<GroupInput>(input)?.group.build()?;
    let g = l.group();
    Ok(match c {
        GroupCommand::Info => json!({
            "id": l.id(),
            "order": l.order(),
            "abelian": g.is_abelian(),
            "element_classes": g.conjugacy_classes().len(),
            "subgroups": l.len(),
            "subgroup_classes": l.num_classes(),
        }),
        GroupCommand::Lattice => {
            let subgroups: Vec<Value> = l
                .ids()
                .map(|h| {
                    let n = l.normalizer_of(h);
                    json!({
                        "label": l.label(h),
                        "order": l.subgroup_order(h),
                        "class": l.class_label(l.class_of(h)),
                        "normal": n == l.whole(),
                        "normalizer": l.label(n),
                        "supergroups": l.supergroups(h).iter().map(|&k| l.label(k)).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let classes: Vec<Value> = l
                .class_ids()
                .map(|c| {
                    json!({
                        "label": l.class_label(c),
                        "order": l.class_order(c),
                        "members": l.class_members(c).iter().map(|&h| l.label(h)).collect::<Vec<_>>(),
                    })
                })
                .collect();
            json!({"id": l.id(), "order": l.order(), "subgroups": subgroups, "classes": classes})
        }
    })
}

// --- burnside ------------------------------------------------------------

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct OneElement {
    group: PresentationJson,
    a: BurnsideJson,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MaybeElement {
    group: PresentationJson,
    #[serde(default)]
    a: Option<BurnsideJson>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TwoElements {
    group: PresentationJson,
    a: BurnsideJson,
    b: BurnsideJson,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SubgroupElement {
    group: PresentationJson,
    subgroup: String,
    a: BurnsideJson,
}

fn burnside(c: &BurnsideCommand, input: &Value) -> Out {
    match c {
        BurnsideCommand::Marks => {
            let i: MaybeElement = parse(input)?;
            let l = i.group.build()?;
            match i.a {
                Some(a) => {
                    let a = a.to_element(&l)?;
                    Ok(json!({"marks": class_labelled(&l, &a.marks())}))
                }
                None => {
                    let table = l.table_of_marks();
                    let rows: Vec<Vec<i64>> = l.class_ids().map(|k| table.row(k).to_vec()).collect();
                    let labels: Vec<String> = l.class_ids().map(|c| l.class_label(c)).collect();
                    Ok(json!({"id": l.id(), "classes": labels, "marks": rows}))
                }
            }
        }
        BurnsideCommand::Mul => {
            let i: TwoElements = parse(input)?;
            let l = i.group.build()?;
            let product = i.a.to_element(&l)?.multiply(&i.b.to_element(&l)?)?;
            Ok(json!({"result": element_json(&product)}))
        }
        BurnsideCommand::Restrict => {
            let i: SubgroupElement = parse(input)?;
            let l = i.group.build()?;
            let h = resolve_subgroup(&l, &i.subgroup)?;
            let r = i.a.to_element(&l)?.restrict(&l.embed(h))?;
            Ok(json!({"subgroup": l.label(h), "result": element_json(&r)}))
        }
        BurnsideCommand::Induce => {
            let i: SubgroupElement = parse(input)?;
            let l = i.group.build()?;
            let h = resolve_subgroup(&l, &i.subgroup)?;
            let e = l.embed(h);
            let r = i.a.to_element(e.lattice())?.induce(&e)?;
            Ok(json!({"subgroup": l.label(h), "result": element_json(&r)}))
        }
        BurnsideCommand::Rk { k } => {
            let i: OneElement = parse(input)?;
            let l = i.group.build()?;
            Ok(json!({"k": k, "value": i.a.to_element(&l)?.r_k(*k)?}))
        }
        BurnsideCommand::Char => {
            let i: OneElement = parse(input)?;
            let l = i.group.build()?;
            let chi = i.a.to_element(&l)?.permutation_character();
            let g = l.group();
            let classes: Vec<Value> = g
                .conjugacy_classes()
                .iter()
                .map(|class| {
                    let rep = class[0];
                    json!({
                        "representative": g.element(rep).to_string(),
                        "size": class.len(),
                        "element_order": g.element_order(rep),
                        "value": chi.value(rep),
                    })
                })
                .collect();
            Ok(json!({"character": classes}))
        }
    }
}

// --- euler ---------------------------------------------------------------

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Stratum {
    class: String,
    chi: i64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StrataInput {
    group: PresentationJson,
    strata: Vec<Stratum>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexInput {
    complex: ComplexJson,
}

fn euler(c: &EulerCommand, input: &Value) -> Out {
    match c {
        EulerCommand::Strat => {
            let i: StrataInput = parse(input)?;
            let l = i.group.build()?;
            let strata = i
                .strata
                .iter()
                .map(|s| Ok((resolve_class(&l, &s.class)?, s.chi)))
                .collect::<eqindex::Result<Vec<_>>>()?;
            let d = StratifiedGData::new(&l, strata)?;
            Ok(json!({
                "chi_g": element_json(&chi_G_stratified(&d)),
                "reduced": element_json(&chi_G_stratified_reduced(&d)),
            }))
        }
        EulerCommand::Simplicial { subdivide } => {
            let mut x = parse::<ComplexInput>(input)?.complex.to_complex()?;
            if *subdivide {
                x = barycentric_subdivide(&x)?;
            }
            let chi = chi_G_simplicial(&x)?;
            Ok(json!({
                "order": x.lattice().order(),
                "subdivided": subdivide,
                "f_vector": x.complex().f_vector(),
                "chi": x.complex().euler_characteristic(),
                "chi_g": element_json(&chi),
            }))
        }
        EulerCommand::Orbifold { k } => {
            let x = parse::<ComplexInput>(input)?.complex.to_complex()?;
            Ok(json!({"k": k, "value": chi_k_direct(&x, *k)?}))
        }
    }
}

// --- index ---------------------------------------------------------------

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StratumIndex {
    class: String,
    index: i64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FromStrataInput {
    group: PresentationJson,
    strata: Vec<StratumIndex>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct InvertInput {
    group: PresentationJson,
    per_subgroup: BTreeMap<String, i64>,
    #[serde(default)]
    per_class: Option<BTreeMap<String, i64>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct OrbitJson {
    isotropy: String,
    local_index: BurnsideJson,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct InduceInput {
    group: PresentationJson,
    isotropy: String,
    local_index: BurnsideJson,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PhInput {
    group: PresentationJson,
    chi_g: BurnsideJson,
    orbits: Vec<OrbitJson>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields, untagged)]
enum GsvInput {
    Radial {
        group: PresentationJson,
        ind_rad: BurnsideJson,
        chibar: BurnsideJson,
    },
    Dimensions {
        group: PresentationJson,
        k: usize,
        fixed_dims: BTreeMap<String, usize>,
        #[serde(default)]
        dims: BTreeMap<String, i64>,
    },
}

fn canonical_labels(l: &SubgroupLattice, m: &BTreeMap<String, i64>) -> eqindex::Result<BTreeMap<String, i64>> {
    m.iter()
        .map(|(k, &v)| Ok((l.label(resolve_subgroup(l, k)?), v)))
        .collect()
}

fn orbit(l: &Arc<SubgroupLattice>, isotropy: &str, local: &BurnsideJson) -> eqindex::Result<SingularOrbitDatum> {
    let h = resolve_subgroup(l, isotropy)?;
    Ok(SingularOrbitDatum {
        isotropy: h,
        local_index: local.to_element(l.embed(h).lattice())?,
    })
}

fn index(c: &IndexCommand, input: &Value) -> Out {
    match c {
        IndexCommand::FromStrata => {
            let i: FromStrataInput = parse(input)?;
            let l = i.group.build()?;
            let entries = i
                .strata
                .iter()
                .map(|s| Ok((resolve_class(&l, &s.class)?, s.index)))
                .collect::<eqindex::Result<Vec<_>>>()?;
            let b = index_from_strata(&StratumIndexData::new(&l, entries)?)?;
            Ok(json!({"index": element_json(&b)}))
        }
        IndexCommand::Invert => {
            let i: InvertInput = parse(input)?;
            let l = i.group.build()?;
            let per_subgroup = canonical_labels(&l, &i.per_subgroup)?;
            let per_class = i.per_class.as_ref().map(|m| canonical_labels(&l, m)).transpose()?;
            let d = FixedSetIndexData::from_labels(&l, &per_subgroup, per_class.as_ref())?;
            let b = index_from_fixed_indices(&d)?;
            let forward = fixed_indices_from_index(&b);
            Ok(json!({
                "index": element_json(&b),
                "sub": element_json(&index_from_fixed_indices_sub(&d)?),
                "conj": element_json(&index_from_fixed_indices_conj(&d)?),
                "per_subgroup": labelled(&l, forward.per_subgroup()),
            }))
        }
        IndexCommand::Induce => {
            let i: InduceInput = parse(input)?;
            let l = i.group.build()?;
            let datum = orbit(&l, &i.isotropy, &i.local_index)?;
            Ok(json!({"index": element_json(&induce_orbit_index(&datum, &l)?)}))
        }
        IndexCommand::PhCheck => {
            let i: PhInput = parse(input)?;
            let l = i.group.build()?;
            let orbits = i
                .orbits
                .iter()
                .map(|o| orbit(&l, &o.isotropy, &o.local_index))
                .collect::<eqindex::Result<Vec<_>>>()?;
            let report = poincare_hopf_check(&i.chi_g.to_element(&l)?, &orbits)?;
            Ok(json!({"pass": report.pass, "discrepancy": element_json(&report.discrepancy)}))
        }
        IndexCommand::Gsv => match parse::<GsvInput>(input)? {
            GsvInput::Radial { group, ind_rad, chibar } => {
                let l = group.build()?;
                let b = gsv_from_radial(&ind_rad.to_element(&l)?, &chibar.to_element(&l)?)?;
                Ok(json!({"gsv": element_json(&b)}))
            }
            GsvInput::Dimensions {
                group,
                k,
                fixed_dims,
                dims,
            } => {
                let l = group.build()?;
                let mut data = GsvDimensions {
                    fixed_dims: vec![0; l.len()],
                    dims: vec![None; l.len()],
                };
                let mut seen = vec![false; l.len()];
                for (label, &n) in &fixed_dims {
                    let h = resolve_subgroup(&l, label)?;
                    data.fixed_dims[h.0] = n;
                    seen[h.0] = true;
                }
                if let Some(h) = l.ids().find(|h| !seen[h.0]) {
                    return Err(Error::MissingDimension(l.label(h)).into());
                }
                for (label, &d) in &dims {
                    data.dims[resolve_subgroup(&l, label)?.0] = Some(d);
                }
                Ok(json!({"gsv": element_json(&gsv_assemble_from_dims(&l, &data, k)?)}))
            }
        },
    }
}

// --- poly ----------------------------------------------------------------

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyInput {
    #[serde(rename = "E")]
    e: Vec<Vec<i64>>,
    /// Generators of a subgroup of the symmetry group; defaults to the
    /// whole symmetry group.
    #[serde(default)]
    group: Option<PresentationJson>,
}

fn acting_group(f: &InvertiblePolynomial, group: Option<&PresentationJson>) -> eqindex::Result<DiagonalGroup> {
    match group {
        None => symmetry_group(f),
        Some(p) => {
            let g = DiagonalGroup::from_lattice(f.num_vars(), p.build()?)?;
            g.check_symmetries_of(f)?;
            Ok(g)
        }
    }
}

fn weights_json(f: &InvertiblePolynomial) -> Value {
    json!(f.weights().iter().map(|&w| RationalJson::from(w)).collect::<Vec<_>>())
}

fn poly(c: &PolyCommand, input: &Value) -> Out {
    let i: PolyInput = parse(input)?;
    let f = InvertiblePolynomial::validate(i.e)?;
    match c {
        PolyCommand::Analyze => {
            let g = acting_group(&f, i.group.as_ref())?;
            let ft = f.transpose();
            let atoms: Vec<Value> = f
                .atoms()
                .iter()
                .map(|a| json!({"kind": a.kind.to_string(), "vars": a.vars, "exponents": a.exponents}))
                .collect();
            Ok(json!({
                "polynomial": f.to_string(),
                "E": f.matrix(),
                "det": f.det() as i64,
                "atoms": atoms,
                "weights": weights_json(&f),
                "mu": f.milnor_number()?,
                "group_order": g.order(),
                "group": g.lattice().id(),
                "transpose": {
                    "polynomial": ft.to_string(),
                    "E": ft.matrix(),
                    "weights": weights_json(&ft),
                    "mu": ft.milnor_number()?,
                },
            }))
        }
        PolyCommand::Index => {
            let g = acting_group(&f, i.group.as_ref())?;
            let l = g.lattice();
            let data = milnor_data(&f, &g)?;
            let ind = &Burnside::one(l) - &data.chi_g;
            let fixed: Vec<Value> = l
                .ids()
                .map(|h| {
                    let d = &data.per_subgroup[h.0];
                    json!({"subgroup": l.label(h), "locus": d.locus, "mu": d.mu, "chi": d.chi})
                })
                .collect();
            Ok(json!({
                "group": l.id(),
                "group_order": l.order(),
                "index": element_json(&ind),
                "cardinality": ind.cardinality(),
                "chi_g": element_json(&data.chi_g),
                "chibar_g": element_json(&(&data.chi_g - &Burnside::one(l))),
                "fixed": fixed,
            }))
        }
        PolyCommand::DualCheck => {
            if i.group.is_some() {
                return Err(CliError {
                    kind: "malformed_json".into(),
                    message: "dual-check always uses the full symmetry groups".into(),
                    path: Some("group".into()),
                });
            }
            let r = duality_check(&f)?;
            let pairs: Vec<Value> = r
                .pairs
                .iter()
                .map(|p| {
                    json!({
                        "subgroup": p.subgroup,
                        "dual_subgroup": p.dual_subgroup,
                        "order": p.order,
                        "dual_order": p.dual_order,
                        "r1": p.r1,
                        "dual_r1": p.dual_r1,
                        "equal": p.equal,
                        "equal_up_to_sign": p.equal_up_to_sign,
                    })
                })
                .collect();
            Ok(json!({
                "n": r.num_vars,
                "det": r.det as i64,
                "r0": r.r0,
                "dual_r0": r.dual_r0,
                "r0_equal": r.r0_equal,
                "pairs": pairs,
                "all_equal": r.all_equal,
                "all_equal_up_to_sign": r.all_equal_up_to_sign,
            }))
        }
    }
}
