//! Dependency relation labels.

use std::fmt;
use std::str::FromStr;

use crate::error::LabelError;

/// Universal part of a dependency relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Universal {
    Root,
    Nsubj,
    Obj,
    Iobj,
    Csubj,
    Ccomp,
    Xcomp,
    Obl,
    Vocative,
    Dislocated,
    Aux,
    Cop,
    Mark,
    Case,
    Fixed,
    Flat,
    Compound,
    Conj,
    Nmod,
    Det,
    Amod,
    Advmod,
    Advcl,
    Punct,
    Dep,
    Acl,
    Nummod,
    Appos,
    Cc,
    Clf,
    Discourse,
    List,
    Parataxis,
    Orphan,
    Goeswith,
    Reparandum,
}

impl Universal {
    pub const ALL: [Universal; 36] = [
        Universal::Root,
        Universal::Nsubj,
        Universal::Obj,
        Universal::Iobj,
        Universal::Csubj,
        Universal::Ccomp,
        Universal::Xcomp,
        Universal::Obl,
        Universal::Vocative,
        Universal::Dislocated,
        Universal::Aux,
        Universal::Cop,
        Universal::Mark,
        Universal::Case,
        Universal::Fixed,
        Universal::Flat,
        Universal::Compound,
        Universal::Conj,
        Universal::Nmod,
        Universal::Det,
        Universal::Amod,
        Universal::Advmod,
        Universal::Advcl,
        Universal::Punct,
        Universal::Dep,
        Universal::Acl,
        Universal::Nummod,
        Universal::Appos,
        Universal::Cc,
        Universal::Clf,
        Universal::Discourse,
        Universal::List,
        Universal::Parataxis,
        Universal::Orphan,
        Universal::Goeswith,
        Universal::Reparandum,
    ];

    pub fn as_str(self) -> &'static str {
        use Universal::*;
        match self {
            Root => "root",
            Nsubj => "nsubj",
            Obj => "obj",
            Iobj => "iobj",
            Csubj => "csubj",
            Ccomp => "ccomp",
            Xcomp => "xcomp",
            Obl => "obl",
            Vocative => "vocative",
            Dislocated => "dislocated",
            Aux => "aux",
            Cop => "cop",
            Mark => "mark",
            Case => "case",
            Fixed => "fixed",
            Flat => "flat",
            Compound => "compound",
            Conj => "conj",
            Nmod => "nmod",
            Det => "det",
            Amod => "amod",
            Advmod => "advmod",
            Advcl => "advcl",
            Punct => "punct",
            Dep => "dep",
            Acl => "acl",
            Nummod => "nummod",
            Appos => "appos",
            Cc => "cc",
            Clf => "clf",
            Discourse => "discourse",
            List => "list",
            Parataxis => "parataxis",
            Orphan => "orphan",
            Goeswith => "goeswith",
            Reparandum => "reparandum",
        }
    }

    fn from_label(s: &str) -> Option<Universal> {
        Universal::ALL.iter().copied().find(|u| u.as_str() == s)
    }
}

/// Relation subtype. Only a handful of pairings are part of the revised
/// Korean inventory; see [`Relation::LEGAL_SUBTYPED`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Subtype {
    Pass,
    Arg,
    Nsubj,
    Poss,
}

impl Subtype {
    pub fn as_str(self) -> &'static str {
        match self {
            Subtype::Pass => "pass",
            Subtype::Arg => "arg",
            Subtype::Nsubj => "nsubj",
            Subtype::Poss => "poss",
        }
    }

    fn from_label(s: &str) -> Option<Subtype> {
        match s {
            "pass" => Some(Subtype::Pass),
            "arg" => Some(Subtype::Arg),
            "nsubj" => Some(Subtype::Nsubj),
            "poss" => Some(Subtype::Poss),
            _ => None,
        }
    }
}

/// A dependency relation as found in the DEPREL column.
///
/// Labels outside the revised inventory can only be created through lax
/// parsing and are kept verbatim in [`Relation::Unknown`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relation {
    Known {
        universal: Universal,
        subtype: Option<Subtype>,
    },
    Unknown(String),
}

const fn plain(universal: Universal) -> Relation {
    Relation::Known {
        universal,
        subtype: None,
    }
}

const fn sub(universal: Universal, subtype: Subtype) -> Relation {
    Relation::Known {
        universal,
        subtype: Some(subtype),
    }
}

impl Relation {
    pub const ROOT: Relation = plain(Universal::Root);
    pub const NSUBJ: Relation = plain(Universal::Nsubj);
    pub const NSUBJ_PASS: Relation = sub(Universal::Nsubj, Subtype::Pass);
    pub const CSUBJ: Relation = plain(Universal::Csubj);
    pub const CSUBJ_PASS: Relation = sub(Universal::Csubj, Subtype::Pass);
    pub const OBJ: Relation = plain(Universal::Obj);
    pub const IOBJ: Relation = plain(Universal::Iobj);
    pub const CCOMP: Relation = plain(Universal::Ccomp);
    pub const XCOMP: Relation = plain(Universal::Xcomp);
    pub const OBL: Relation = plain(Universal::Obl);
    pub const OBL_ARG: Relation = sub(Universal::Obl, Subtype::Arg);
    pub const VOCATIVE: Relation = plain(Universal::Vocative);
    pub const DISLOCATED: Relation = plain(Universal::Dislocated);
    pub const DISLOCATED_NSUBJ: Relation = sub(Universal::Dislocated, Subtype::Nsubj);
    pub const AUX: Relation = plain(Universal::Aux);
    pub const COP: Relation = plain(Universal::Cop);
    pub const MARK: Relation = plain(Universal::Mark);
    pub const CASE: Relation = plain(Universal::Case);
    pub const FIXED: Relation = plain(Universal::Fixed);
    pub const FLAT: Relation = plain(Universal::Flat);
    pub const COMPOUND: Relation = plain(Universal::Compound);
    pub const CONJ: Relation = plain(Universal::Conj);
    pub const NMOD: Relation = plain(Universal::Nmod);
    pub const NMOD_POSS: Relation = sub(Universal::Nmod, Subtype::Poss);
    pub const DET: Relation = plain(Universal::Det);
    pub const AMOD: Relation = plain(Universal::Amod);
    pub const ADVMOD: Relation = plain(Universal::Advmod);
    pub const ADVCL: Relation = plain(Universal::Advcl);
    pub const ACL: Relation = plain(Universal::Acl);
    pub const PUNCT: Relation = plain(Universal::Punct);
    pub const DEP: Relation = plain(Universal::Dep);
    pub const DISCOURSE: Relation = plain(Universal::Discourse);

    /// The subtyped relations of the revised inventory.
    pub const LEGAL_SUBTYPED: [Relation; 5] = [
        Relation::NSUBJ_PASS,
        Relation::CSUBJ_PASS,
        Relation::OBL_ARG,
        Relation::DISLOCATED_NSUBJ,
        Relation::NMOD_POSS,
    ];

    pub fn universal(&self) -> Option<Universal> {
        match self {
            Relation::Known { universal, .. } => Some(*universal),
            Relation::Unknown(_) => None,
        }
    }

    pub fn subtype(&self) -> Option<Subtype> {
        match self {
            Relation::Known { subtype, .. } => *subtype,
            Relation::Unknown(_) => None,
        }
    }

    /// True if the universal part equals `u`, whatever the subtype.
    pub fn is(&self, u: Universal) -> bool {
        self.universal() == Some(u)
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Relation::Unknown(_))
    }

    /// Parse a label, keeping labels outside the inventory as `Unknown`.
    pub fn parse_lax(s: &str) -> Relation {
        s.parse().unwrap_or_else(|_| Relation::Unknown(s.to_owned()))
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relation::Known {
                universal,
                subtype: None,
            } => f.write_str(universal.as_str()),
            Relation::Known {
                universal,
                subtype: Some(s),
            } => write!(f, "{}:{}", universal.as_str(), s.as_str()),
            Relation::Unknown(s) => f.write_str(s),
        }
    }
}

impl FromStr for Relation {
    type Err = LabelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || LabelError(s.to_owned());
        match s.split_once(':') {
            None => Universal::from_label(s).map(plain).ok_or_else(unknown),
            Some((u, st)) => {
                let rel = sub(
                    Universal::from_label(u).ok_or_else(unknown)?,
                    Subtype::from_label(st).ok_or_else(unknown)?,
                );
                if Relation::LEGAL_SUBTYPED.contains(&rel) {
                    Ok(rel)
                } else {
                    Err(unknown())
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subtyped_labels_round_trip() {
        for rel in Relation::LEGAL_SUBTYPED {
            assert_eq!(rel.to_string().parse::<Relation>().unwrap(), rel);
        }
    }

    #[test]
    fn every_universal_round_trips() {
        for u in Universal::ALL {
            assert_eq!(u.as_str().parse::<Relation>().unwrap(), plain(u));
        }
    }

    #[test]
    fn rejects_unlicensed_pairings() {
        assert!("obl:pass".parse::<Relation>().is_err());
        assert!("nsubj:arg".parse::<Relation>().is_err());
        assert!("acl:relcl".parse::<Relation>().is_err());
        assert!("expl".parse::<Relation>().is_err());
        assert!("".parse::<Relation>().is_err());
    }

    #[test]
    fn lax_keeps_verbatim() {
        assert_eq!(
            Relation::parse_lax("obl:tmod"),
            Relation::Unknown("obl:tmod".into())
        );
        assert_eq!(Relation::parse_lax("obl:arg"), Relation::OBL_ARG);
    }
}
