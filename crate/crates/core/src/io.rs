//! JSON input files. The kind of file is read off its top-level keys:
//! `arrows` for a groupoid, `semigroup` for an action, `elements` for a semigroup table.

use std::collections::{BTreeMap, BTreeSet};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::action::{ActionData, PartialAction};
use crate::error::{Error, Result};
use crate::isg::{InverseSemigroup, RawSemigroup};
use crate::scalar::{Carrier, CarrierJson, Scalar};
use crate::skew::{SkewElement, SkewRing};
use crate::space::{ClopenSet, LcFun, SpaceModel};
use crate::steinberg::{Groupoid, RawGroupoid, SteinbergFun};

/// A clopen set: explicit points are 1-based; `tail` adds the tail and `∞`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct RawSet {
    #[serde(default)]
    pub points: Vec<usize>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub tail: bool,
}

/// A map on explicit points, 1-based. The tail and `∞` are always fixed.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct RawMap {
    #[serde(default)]
    pub points: BTreeMap<String, usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tail: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RawAction {
    pub semigroup: RawSemigroup,
    pub space: SpaceModel,
    pub domains: BTreeMap<String, RawSet>,
    #[serde(default)]
    pub maps: BTreeMap<String, RawMap>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tail_witnessed: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub carrier: Option<CarrierJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GroupoidFile {
    #[serde(flatten)]
    pub groupoid: RawGroupoid,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub carrier: Option<CarrierJson>,
}

#[derive(Clone, Debug)]
pub enum Input {
    Semigroup(RawSemigroup),
    Action(RawAction),
    Groupoid(GroupoidFile),
}

impl Input {
    pub fn kind(&self) -> &'static str {
        match self {
            Input::Semigroup(_) => "semigroup",
            Input::Action(_) => "action",
            Input::Groupoid(_) => "groupoid",
        }
    }

    /// Carrier declared in the file, if any.
    pub fn carrier(&self) -> Result<Option<Carrier>> {
        let c = match self {
            Input::Semigroup(_) => None,
            Input::Action(a) => a.carrier.clone(),
            Input::Groupoid(g) => g.carrier.clone(),
        };
        c.map(Carrier::try_from).transpose()
    }
}

fn typed<T: DeserializeOwned>(text: &str) -> Result<T> {
    // parse from text again so errors carry line and column
    serde_json::from_str(text).map_err(Error::from)
}

pub fn parse_input(text: &str) -> Result<Input> {
    let value: Value = serde_json::from_str(text)?;
    let obj = value.as_object().ok_or_else(|| Error::Parse("top level must be a JSON object".into()))?;
    let input = if obj.contains_key("arrows") {
        Input::Groupoid(typed(text)?)
    } else if obj.contains_key("semigroup") {
        Input::Action(typed(text)?)
    } else if obj.contains_key("elements") {
        Input::Semigroup(typed(text)?)
    } else {
        return Err(Error::Parse("expected one of the keys `elements`, `semigroup` or `arrows`".into()));
    };
    let empty = match &input {
        Input::Semigroup(s) => s.elements.is_empty(),
        Input::Action(a) => a.semigroup.elements.is_empty(),
        Input::Groupoid(g) => g.groupoid.arrows.is_empty(),
    };
    if empty {
        return Err(Error::Parse(format!("{} has no elements", input.kind())));
    }
    Ok(input)
}

fn clopen(model: SpaceModel, set: &RawSet, owner: &str) -> Result<ClopenSet> {
    if set.tail && model.tail().is_none() {
        return Err(Error::Space(format!("domain of {owner} uses the tail of a finite space")));
    }
    ClopenSet::from_labels(model, &set.points, set.tail)
}

pub fn build_action(raw: &RawAction) -> Result<PartialAction> {
    let s = InverseSemigroup::verify(&raw.semigroup)?;
    let model = raw.space;
    let known = |label: &String, what: &str| -> Result<usize> {
        s.index_of(label).ok_or_else(|| Error::Parse(format!("{what} names unknown element `{label}`")))
    };
    for label in raw.domains.keys() {
        known(label, "domains")?;
    }
    for (label, map) in &raw.maps {
        known(label, "maps")?;
        if map.tail.as_deref().is_some_and(|t| t != "identity") {
            return Err(Error::action("θ_s fixes the tail", format!("s = {label}")));
        }
    }
    let mut domains = Vec::new();
    let mut maps = Vec::new();
    for i in 0..s.len() {
        let label = s.label(i).to_string();
        let d =
            raw.domains.get(&label).ok_or_else(|| Error::Parse(format!("no domain given for element `{label}`")))?;
        domains.push(clopen(model, d, &label)?);
        let mut m = BTreeMap::new();
        if let Some(map) = raw.maps.get(&label) {
            for (x, &y) in &map.points {
                let x: usize =
                    x.parse().map_err(|_| Error::Parse(format!("map of `{label}`: `{x}` is not a point")))?;
                let w = model.explicit_points();
                if x == 0 || y == 0 || x > w || y > w {
                    return Err(Error::action("θ_s maps explicit points", format!("s = {label}, {x} ↦ {y}")));
                }
                m.insert(x - 1, y - 1);
            }
        }
        maps.push(m);
    }
    let tail_witnessed: BTreeSet<usize> =
        raw.tail_witnessed.iter().map(|l| known(l, "tail_witnessed")).collect::<Result<_>>()?;
    PartialAction::new(s, ActionData { model, domains, maps, tail_witnessed })
}

pub fn action_to_raw(action: &PartialAction, carrier: Option<Carrier>) -> RawAction {
    let s = action.semigroup();
    let model = action.model();
    let data = action.to_data();
    let mut domains = BTreeMap::new();
    let mut maps = BTreeMap::new();
    for i in 0..s.len() {
        let (points, tail) = data.domains[i].to_labels();
        domains.insert(s.label(i).to_string(), RawSet { points, tail });
        let points = data.maps[i].iter().map(|(&x, &y)| ((x + 1).to_string(), y + 1)).collect();
        maps.insert(
            s.label(i).to_string(),
            RawMap { points, tail: data.domains[i].has_tail().then(|| "identity".to_string()) },
        );
    }
    RawAction {
        semigroup: s.to_raw(),
        space: model,
        domains,
        maps,
        tail_witnessed: data.tail_witnessed.iter().map(|&i| s.label(i).to_string()).collect(),
        carrier: carrier.map(CarrierJson::from),
    }
}

pub fn build_groupoid(file: &GroupoidFile) -> Result<Groupoid> {
    Groupoid::verify(&file.groupoid)
}

/// A scalar literal: an integer, or a string such as `"-3"` or `"2/3"`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum RawValue {
    Int(i64),
    Text(String),
}

/// One piece `value · 1_piece` of a locally constant function.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct RawPiece {
    pub piece: RawSet,
    pub value: RawValue,
}

/// One term `coeff δ_s` of a skew ring element.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct RawTerm {
    pub s: String,
    pub coeff: Vec<RawPiece>,
}

fn scalar(carrier: Carrier, v: &RawValue) -> Result<Scalar> {
    match v {
        RawValue::Int(i) => Ok(carrier.from_i64(*i)),
        RawValue::Text(t) => carrier.parse_value(t),
    }
}

/// `Σ c_i 1_{D_i}` from pairwise disjoint pieces.
pub fn build_function(model: SpaceModel, carrier: Carrier, pieces: &[RawPiece]) -> Result<LcFun> {
    let pieces = pieces
        .iter()
        .map(|p| Ok((clopen(model, &p.piece, "a function piece")?, scalar(carrier, &p.value)?)))
        .collect::<Result<Vec<_>>>()?;
    LcFun::from_pieces(model, carrier, &pieces)
}

/// An element `Σ f_s δ_s`; repeated labels are summed.
pub fn build_element(ring: &SkewRing, terms: &[RawTerm]) -> Result<SkewElement> {
    let s = ring.action().semigroup();
    let mut x = SkewElement::zero(ring.model(), ring.carrier());
    for t in terms {
        let idx = s.index_of(&t.s).ok_or_else(|| Error::Parse(format!("element literal names unknown `{}`", t.s)))?;
        let f = build_function(ring.model(), ring.carrier(), &t.coeff)?;
        x = x.add(&ring.element(vec![(idx, f)])?)?;
    }
    Ok(x)
}

pub fn parse_element(ring: &SkewRing, text: &str) -> Result<SkewElement> {
    build_element(ring, &typed::<Vec<RawTerm>>(text)?)
}

/// A function on arrows given as `{"arrow": value}`; missing arrows are zero.
pub fn build_steinberg_fun(
    g: &Groupoid,
    carrier: Carrier,
    values: &BTreeMap<String, RawValue>,
) -> Result<SteinbergFun> {
    let mut out = vec![crate::linalg::Field::zero(&carrier); g.len()];
    for (label, v) in values {
        let a = (0..g.len())
            .find(|&a| g.label(a) == label)
            .ok_or_else(|| Error::Parse(format!("function names unknown arrow `{label}`")))?;
        out[a] = scalar(carrier, v)?;
    }
    Ok(SteinbergFun::from_values(carrier, out))
}

pub fn parse_steinberg_fun(g: &Groupoid, carrier: Carrier, text: &str) -> Result<SteinbergFun> {
    build_steinberg_fun(g, carrier, &typed(text)?)
}
