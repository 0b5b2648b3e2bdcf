//! JSON interchange formats.
//!
//! * poset: `{"n": 3, "leq": [[0,0],[0,2],...], "order": [0,1,2]}` with the
//!   full reflexive closure in `leq`; `order` (positions) marks a linearly
//!   ordered poset.
//! * lattice: `{"base": <poset>, "elements": ["000", "100", ...]}` where
//!   character `i` of each bit-string is base element `i`, plus an optional
//!   `"natural_order": {"irr_order": [...]}`.
//! * raw tables: `{"join": [[..]], "meet": [[..]], "bottom": 0, "top": 4}`.
//! * homomorphism / embedding: `{"map": [...]}`, optionally with
//!   `"orders": {"source": {"irr_order": ..}, "target": {"irr_order": ..}}`.
//! * congruence: `{"blocks": [[...], ...]}` sorted by least element, optionally
//!   with `"orders": {"lattice": {"irr_order": ..}}`.

use serde::{Deserialize, Serialize};

use crate::bits::{from_bitstring, to_bitstring};
use crate::lattice::{Congruence, DistLattice, RawLattice};
use crate::ordered::{NaturalOrder, OrderedLattice};
use crate::poset::{AnyPoset, LinearOrderedPoset, Poset};
use crate::{Error, Flags, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetJson {
    pub n: usize,
    pub leq: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<usize>>,
}

impl PosetJson {
    pub fn from_poset(p: &Poset) -> Self {
        PosetJson { n: p.len(), leq: p.relation_pairs().into_iter().map(|(a, b)| [a, b]).collect(), order: None }
    }

    pub fn from_linear(p: &LinearOrderedPoset) -> Self {
        PosetJson { order: Some(p.positions().to_vec()), ..PosetJson::from_poset(p.poset()) }
    }

    pub fn from_any(p: &AnyPoset) -> Self {
        match p {
            AnyPoset::Plain(p) => PosetJson::from_poset(p),
            AnyPoset::Ordered(p) => PosetJson::from_linear(p),
        }
    }

    /// The underlying poset; any `order` is ignored.
    pub fn to_poset(&self, flags: Flags) -> Result<Poset> {
        for &[a, b] in &self.leq {
            for x in [a, b] {
                if x >= self.n {
                    return Err(Error::IndexOutOfRange { index: x, len: self.n });
                }
            }
        }
        let pairs: Vec<(usize, usize)> = self.leq.iter().map(|&[a, b]| (a, b)).collect();
        Poset::from_pairs_with(self.n, &pairs, flags)
    }

    pub fn to_any(&self, flags: Flags) -> Result<AnyPoset> {
        let p = self.to_poset(flags)?;
        Ok(match &self.order {
            Some(pos) => AnyPoset::Ordered(LinearOrderedPoset::new(p, pos.clone())?),
            None => AnyPoset::Plain(p),
        })
    }

    pub fn to_linear(&self, flags: Flags) -> Result<LinearOrderedPoset> {
        match self.to_any(flags)? {
            AnyPoset::Ordered(p) => Ok(p),
            AnyPoset::Plain(_) => Err(Error::FlavorMismatch),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NaturalOrderJson {
    pub irr_order: Vec<usize>,
}

impl From<&NaturalOrder> for NaturalOrderJson {
    fn from(o: &NaturalOrder) -> Self {
        NaturalOrderJson { irr_order: o.irr_order().to_vec() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeJson {
    pub base: PosetJson,
    /// Optional on input; when present it must list the down-sets of `base`
    /// in canonical order.
    #[serde(default)]
    pub elements: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub natural_order: Option<NaturalOrderJson>,
}

impl LatticeJson {
    pub fn from_lattice(l: &DistLattice) -> Self {
        let n = l.base().len();
        LatticeJson {
            base: PosetJson::from_poset(l.base()),
            elements: l.elements().iter().map(|&m| to_bitstring(m, n)).collect(),
            natural_order: None,
        }
    }

    pub fn from_ordered(l: &OrderedLattice) -> Self {
        LatticeJson { natural_order: Some(l.order().into()), ..LatticeJson::from_lattice(l.lattice()) }
    }

    pub fn to_lattice(&self, flags: Flags) -> Result<DistLattice> {
        let base = self.base.to_poset(flags)?;
        let l = DistLattice::from_poset_with(&base, flags)?;
        if !self.elements.is_empty() {
            let n = base.len();
            let parsed: Option<Vec<u64>> =
                self.elements.iter().map(|s| if s.len() == n { from_bitstring(s) } else { None }).collect();
            match parsed {
                Some(masks) if masks == l.elements() => {}
                _ => {
                    return Err(Error::Invalid(
                        "elements must be the down-sets of base as bit-strings, sorted by mask value".into(),
                    ))
                }
            }
        }
        Ok(l)
    }

    pub fn to_ordered(&self, flags: Flags) -> Result<OrderedLattice> {
        let order = self.natural_order.as_ref().ok_or_else(|| Error::Invalid("lattice has no natural_order".into()))?;
        OrderedLattice::new(self.to_lattice(flags)?, &order.irr_order)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TablesJson {
    pub join: Vec<Vec<usize>>,
    pub meet: Vec<Vec<usize>>,
    pub bottom: usize,
    pub top: usize,
}

impl From<TablesJson> for RawLattice {
    fn from(t: TablesJson) -> Self {
        RawLattice { join: t.join, meet: t.meet, bottom: t.bottom, top: t.top }
    }
}

impl From<&RawLattice> for TablesJson {
    fn from(t: &RawLattice) -> Self {
        TablesJson { join: t.join.clone(), meet: t.meet.clone(), bottom: t.bottom, top: t.top }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomOrdersJson {
    pub source: NaturalOrderJson,
    pub target: NaturalOrderJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapJson {
    pub map: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orders: Option<HomOrdersJson>,
}

impl MapJson {
    pub fn plain(map: Vec<usize>) -> Self {
        MapJson { map, orders: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CongruenceOrdersJson {
    pub lattice: NaturalOrderJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CongruenceJson {
    pub blocks: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orders: Option<CongruenceOrdersJson>,
}

impl CongruenceJson {
    pub fn from_congruence(c: &Congruence) -> Self {
        CongruenceJson { blocks: c.blocks().to_vec(), orders: None }
    }

    pub fn to_congruence(&self, l: &DistLattice) -> Result<Congruence> {
        Congruence::from_blocks(l, self.blocks.clone())
    }
}

/// Any structure document, told apart by its fields.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Document {
    Lattice(LatticeJson),
    Tables(TablesJson),
    Poset(PosetJson),
}

pub fn parse_document(text: &str) -> Result<Document> {
    serde_json::from_str(text).map_err(|e| Error::Invalid(format!("unrecognized document: {e}")))
}
