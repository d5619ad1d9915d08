//! A group of any supported element kind behind one type.

use crate::atlas::Class2Element;
use crate::error::{GroupError, Result};
use crate::fpalgebra::FpMatrix;
use crate::group::{check_lemmas, derived_series, EngineKind, Finding, Group, SeriesReport};
use crate::perm::Permutation;

#[derive(Debug, Clone)]
pub enum AnyGroup {
    Perm(Group<Permutation>),
    Matrix(Group<FpMatrix>),
    Class2(Group<Class2Element>),
}

macro_rules! dispatch {
    ($self:expr, $g:ident => $body:expr) => {
        match $self {
            AnyGroup::Perm($g) => $body,
            AnyGroup::Matrix($g) => $body,
            AnyGroup::Class2($g) => $body,
        }
    };
}

impl AnyGroup {
    pub fn kind(&self) -> &'static str {
        match self {
            AnyGroup::Perm(_) => "permutation",
            AnyGroup::Matrix(_) => "matrix",
            AnyGroup::Class2(_) => "class-two",
        }
    }

    pub fn order(&self) -> Result<u128> {
        dispatch!(self, g => g.order())
    }

    pub fn engine_kind(&self) -> EngineKind {
        dispatch!(self, g => g.engine_kind())
    }

    pub fn with_cap(&self, cap: usize) -> AnyGroup {
        match self {
            AnyGroup::Perm(g) => AnyGroup::Perm(g.with_cap(cap)),
            AnyGroup::Matrix(g) => AnyGroup::Matrix(g.with_cap(cap)),
            AnyGroup::Class2(g) => AnyGroup::Class2(g.with_cap(cap)),
        }
    }

    pub fn series(&self) -> Result<SeriesReport> {
        dispatch!(self, g => Ok(derived_series(g)?.report))
    }

    /// Derived series and structural findings; `in_cs` as in [`check_lemmas`].
    pub fn analyze(&self, in_cs: impl Fn(&SeriesReport) -> bool) -> Result<(SeriesReport, Vec<Finding>)> {
        dispatch!(self, g => {
            let s = derived_series(g)?;
            let findings = check_lemmas(g, &s, in_cs(&s.report));
            Ok((s.report, findings))
        })
    }

    pub fn as_perm(&self) -> Result<&Group<Permutation>> {
        match self {
            AnyGroup::Perm(g) => Ok(g),
            other => Err(GroupError::KindMismatch(format!(
                "expected a permutation group, found a {} group",
                other.kind()
            ))),
        }
    }

    pub fn as_matrix(&self) -> Result<&Group<FpMatrix>> {
        match self {
            AnyGroup::Matrix(g) => Ok(g),
            other => Err(GroupError::KindMismatch(format!(
                "expected a matrix group, found a {} group",
                other.kind()
            ))),
        }
    }

    /// The right-regular permutation representation, or the group itself.
    pub fn to_perm(&self) -> Result<Group<Permutation>> {
        match self {
            AnyGroup::Perm(g) => Ok(g.clone()),
            AnyGroup::Matrix(g) => crate::atlas::regular(g),
            AnyGroup::Class2(g) => crate::atlas::regular(g),
        }
    }
}

impl From<Group<Permutation>> for AnyGroup {
    fn from(g: Group<Permutation>) -> Self {
        AnyGroup::Perm(g)
    }
}

impl From<Group<FpMatrix>> for AnyGroup {
    fn from(g: Group<FpMatrix>) -> Self {
        AnyGroup::Matrix(g)
    }
}

impl From<Group<Class2Element>> for AnyGroup {
    fn from(g: Group<Class2Element>) -> Self {
        AnyGroup::Class2(g)
    }
}
