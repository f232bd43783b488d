//! Runtime-selected weight space, for callers that learn the structure from
//! input data.

use std::cmp::Ordering;

use crate::error::CoreError;
use crate::graph::ArcRef;
use crate::space::{ComparisonResult, RelationKind, WeightSpace};
use crate::table::{TableWeight, TableWeightSpace};
use crate::weights::bottleneck::{BottleneckSpace, BottleneckWeight};
use crate::weights::evsp::{EvspSpace, EvspWeight};
use crate::weights::fifo::{FifoSpace, TimeWeight};
use crate::weights::interval::{IntervalSpace, IntervalWeight};
use crate::weights::kn::{KnSpace, KnWeight};
use crate::weights::product::ProductSpace;
use crate::weights::semilattice::{Cap, MinSemilatticeSpace};
use crate::weights::subset::{SubsetSpace, SubsetWeight};
use crate::weights::tourist::{TouristSpace, TouristWeight};
use crate::weights::vector::{MospSpace, VectorWeight};
use crate::weights::wcspr::{WcsprSpace, WcsprWeight};

#[derive(Debug, Clone)]
pub enum AnySpace {
    Mosp(MospSpace),
    Bottleneck(BottleneckSpace),
    Semilattice(MinSemilatticeSpace),
    Subset(SubsetSpace),
    Interval(IntervalSpace),
    Fifo(FifoSpace),
    Wcspr(WcsprSpace),
    Evsp(EvspSpace),
    Tourist(TouristSpace),
    Table(TableWeightSpace),
    Kn(KnSpace),
    Product(Box<ProductSpace<AnySpace, AnySpace>>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AnyWeight {
    Vector(VectorWeight),
    Bottleneck(BottleneckWeight),
    Caps(Vec<Cap>),
    Subset(SubsetWeight),
    Interval(IntervalWeight),
    Time(TimeWeight),
    Wcspr(WcsprWeight),
    Evsp(EvspWeight),
    Tourist(TouristWeight),
    Table(TableWeight),
    Kn(KnWeight),
    Pair(Box<(AnyWeight, AnyWeight)>),
}

impl AnySpace {
    pub fn kind(&self) -> &'static str {
        match self {
            AnySpace::Mosp(_) => "mosp",
            AnySpace::Bottleneck(_) => "bottleneck",
            AnySpace::Semilattice(_) => "semilattice",
            AnySpace::Subset(_) => "subset",
            AnySpace::Interval(_) => "interval",
            AnySpace::Fifo(_) => "fifo_time",
            AnySpace::Wcspr(_) => "wcspr",
            AnySpace::Evsp(_) => "evsp",
            AnySpace::Tourist(_) => "tourist",
            AnySpace::Table(_) => "table",
            AnySpace::Kn(_) => "kn",
            AnySpace::Product(_) => "product",
        }
    }
}

// Applies `$body` to the inner space and its matching weight variants.
macro_rules! with_space {
    ($self:expr, $s:ident => $body:expr) => {
        match $self {
            AnySpace::Mosp($s) => $body,
            AnySpace::Bottleneck($s) => $body,
            AnySpace::Semilattice($s) => $body,
            AnySpace::Subset($s) => $body,
            AnySpace::Interval($s) => $body,
            AnySpace::Fifo($s) => $body,
            AnySpace::Wcspr($s) => $body,
            AnySpace::Evsp($s) => $body,
            AnySpace::Tourist($s) => $body,
            AnySpace::Table($s) => $body,
            AnySpace::Kn($s) => $body,
            AnySpace::Product($s) => $body,
        }
    };
}

macro_rules! with_pair {
    ($self:expr, $a:expr, $b:expr, ($s:ident, $x:ident, $y:ident) => $body:expr, $otherwise:expr) => {
        match ($self, $a, $b) {
            (AnySpace::Mosp($s), AnyWeight::Vector($x), AnyWeight::Vector($y)) => $body,
            (AnySpace::Bottleneck($s), AnyWeight::Bottleneck($x), AnyWeight::Bottleneck($y)) => $body,
            (AnySpace::Semilattice($s), AnyWeight::Caps($x), AnyWeight::Caps($y)) => $body,
            (AnySpace::Subset($s), AnyWeight::Subset($x), AnyWeight::Subset($y)) => $body,
            (AnySpace::Interval($s), AnyWeight::Interval($x), AnyWeight::Interval($y)) => $body,
            (AnySpace::Fifo($s), AnyWeight::Time($x), AnyWeight::Time($y)) => $body,
            (AnySpace::Wcspr($s), AnyWeight::Wcspr($x), AnyWeight::Wcspr($y)) => $body,
            (AnySpace::Evsp($s), AnyWeight::Evsp($x), AnyWeight::Evsp($y)) => $body,
            (AnySpace::Tourist($s), AnyWeight::Tourist($x), AnyWeight::Tourist($y)) => $body,
            (AnySpace::Table($s), AnyWeight::Table($x), AnyWeight::Table($y)) => $body,
            (AnySpace::Kn($s), AnyWeight::Kn($x), AnyWeight::Kn($y)) => $body,
            (AnySpace::Product($s), AnyWeight::Pair($x), AnyWeight::Pair($y)) => {
                let ($x, $y) = (&**$x, &**$y);
                $body
            }
            _ => $otherwise,
        }
    };
}

macro_rules! with_one {
    ($self:expr, $a:expr, ($s:ident, $x:ident, $wrap:ident) => $body:expr, $otherwise:expr) => {
        match ($self, $a) {
            (AnySpace::Mosp($s), AnyWeight::Vector($x)) => {
                let $wrap = AnyWeight::Vector;
                $body
            }
            (AnySpace::Bottleneck($s), AnyWeight::Bottleneck($x)) => {
                let $wrap = AnyWeight::Bottleneck;
                $body
            }
            (AnySpace::Semilattice($s), AnyWeight::Caps($x)) => {
                let $wrap = AnyWeight::Caps;
                $body
            }
            (AnySpace::Subset($s), AnyWeight::Subset($x)) => {
                let $wrap = AnyWeight::Subset;
                $body
            }
            (AnySpace::Interval($s), AnyWeight::Interval($x)) => {
                let $wrap = AnyWeight::Interval;
                $body
            }
            (AnySpace::Fifo($s), AnyWeight::Time($x)) => {
                let $wrap = AnyWeight::Time;
                $body
            }
            (AnySpace::Wcspr($s), AnyWeight::Wcspr($x)) => {
                let $wrap = AnyWeight::Wcspr;
                $body
            }
            (AnySpace::Evsp($s), AnyWeight::Evsp($x)) => {
                let $wrap = AnyWeight::Evsp;
                $body
            }
            (AnySpace::Tourist($s), AnyWeight::Tourist($x)) => {
                let $wrap = AnyWeight::Tourist;
                $body
            }
            (AnySpace::Table($s), AnyWeight::Table($x)) => {
                let $wrap = AnyWeight::Table;
                $body
            }
            (AnySpace::Kn($s), AnyWeight::Kn($x)) => {
                let $wrap = AnyWeight::Kn;
                $body
            }
            (AnySpace::Product($s), AnyWeight::Pair($x)) => {
                let $wrap = |p| AnyWeight::Pair(Box::new(p));
                let $x = &**$x;
                $body
            }
            _ => $otherwise,
        }
    };
}

fn mismatch(w: &AnyWeight) -> CoreError {
    CoreError::DomainMismatch(format!("{w:?}"))
}

impl WeightSpace for AnySpace {
    type Weight = AnyWeight;

    fn compare(&self, a: &AnyWeight, b: &AnyWeight) -> ComparisonResult {
        with_pair!(self, a, b, (s, x, y) => s.compare(x, y), ComparisonResult::Incomparable)
    }

    fn extend(&self, w: &AnyWeight, arc: ArcRef) -> Result<AnyWeight, CoreError> {
        with_one!(self, w, (s, x, wrap) => s.extend(x, arc).map(wrap), Err(mismatch(w)))
    }

    fn initial(&self) -> AnyWeight {
        match self {
            AnySpace::Mosp(s) => AnyWeight::Vector(s.initial()),
            AnySpace::Bottleneck(s) => AnyWeight::Bottleneck(s.initial()),
            AnySpace::Semilattice(s) => AnyWeight::Caps(s.initial()),
            AnySpace::Subset(s) => AnyWeight::Subset(s.initial()),
            AnySpace::Interval(s) => AnyWeight::Interval(s.initial()),
            AnySpace::Fifo(s) => AnyWeight::Time(s.initial()),
            AnySpace::Wcspr(s) => AnyWeight::Wcspr(s.initial()),
            AnySpace::Evsp(s) => AnyWeight::Evsp(s.initial()),
            AnySpace::Tourist(s) => AnyWeight::Tourist(s.initial()),
            AnySpace::Table(s) => AnyWeight::Table(s.initial()),
            AnySpace::Kn(s) => AnyWeight::Kn(s.initial()),
            AnySpace::Product(s) => AnyWeight::Pair(Box::new(s.initial())),
        }
    }

    fn arc_count(&self) -> Option<usize> {
        with_space!(self, s => s.arc_count())
    }

    fn leo_cmp(&self, a: &AnyWeight, b: &AnyWeight) -> Option<Ordering> {
        with_pair!(self, a, b, (s, x, y) => s.leo_cmp(x, y), None)
    }

    fn has_leo(&self) -> bool {
        with_space!(self, s => s.has_leo())
    }

    fn relation_kind(&self) -> RelationKind {
        with_space!(self, s => s.relation_kind())
    }

    fn is_feasible(&self, w: &AnyWeight) -> bool {
        with_one!(self, w, (s, x, _wrap) => s.is_feasible(x), false)
    }

    fn check_domain(&self, w: &AnyWeight) -> Result<(), CoreError> {
        with_one!(self, w, (s, x, _wrap) => s.check_domain(x), Err(mismatch(w)))
    }
}
