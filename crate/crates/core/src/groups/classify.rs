//! Exception-list classifiers for graphical, digraphical and oriented
//! regular representations.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::library::{exception_list, Exceptional, ListKind};
use super::structure::{
    element_order_histogram, elementary_abelian_2_rank, generalized_dicyclic_witness, generalized_dihedral_witness,
    is_abelian, IndexTwoWitness,
};
use super::{FamilyInfo, FiniteGroup, Group};

/// Which kind of regular representation is asked about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Grr,
    Drr,
    Orr,
}

impl Mode {
    fn list(self) -> ListKind {
        match self {
            Mode::Grr => ListKind::Grr,
            Mode::Drr => ListKind::Drr,
            Mode::Orr => ListKind::Orr,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Grr => "GRR",
            Mode::Drr => "DRR",
            Mode::Orr => "ORR",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Admits,
    ExceptionAbelian,
    ExceptionGenDicyclic,
    ExceptionGenDihedral,
    ExceptionFiniteList,
    Unknown,
}

impl Verdict {
    pub fn is_exception(self) -> bool {
        !matches!(self, Verdict::Admits | Verdict::Unknown)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Abelian index-2 subgroup `A` and `x` outside it inverting `A`.
    IndexTwo { subgroup: Vec<String>, x: String },
    /// Images of the stored presentation's generators.
    Presentation { id: String, images: BTreeMap<char, String> },
    /// Primary invariants of a finite abelian group.
    AbelianInvariants { invariants: Vec<u64> },
    /// Property declared by a built-in family.
    Declared { property: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub group: String,
    pub mode: Mode,
    pub verdict: Verdict,
    /// `ADMITS_GRR`, `EXCEPTION_FINITE_LIST`, ...
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exception_id: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub reason: String,
}

impl Classification {
    fn new(group: &str, mode: Mode, verdict: Verdict, reason: impl Into<String>) -> Self {
        let label = match verdict {
            Verdict::Admits => format!("ADMITS_{mode}"),
            Verdict::Unknown => "UNKNOWN".into(),
            v => serde_json::to_value(v).unwrap().as_str().unwrap().to_string(),
        };
        Classification {
            group: group.to_string(),
            mode,
            verdict,
            label,
            exception_id: None,
            witness: None,
            reason: reason.into(),
        }
    }

    fn with_witness(mut self, w: Witness) -> Self {
        self.witness = Some(w);
        self
    }
}

fn index_two(g: &FiniteGroup, w: &IndexTwoWitness) -> Witness {
    Witness::IndexTwo { subgroup: w.subgroup.iter().map(|e| g.format(e)).collect(), x: g.format(&w.x) }
}

/// Primary invariants `p^k` of a finite abelian group, sorted.
pub fn abelian_invariants(g: &FiniteGroup) -> Vec<u64> {
    let n = g.len() as u64;
    let mut out = Vec::new();
    let mut m = n;
    let mut p = 2;
    while m > 1 {
        if !m.is_multiple_of(p) {
            p += 1;
            continue;
        }
        while m.is_multiple_of(p) {
            m /= p;
        }
        // c[k] = log_p #{x : x^(p^k) = 1}
        let mut c = vec![0u32];
        let mut pk = 1u64;
        loop {
            pk *= p;
            let count = (0..g.len() as u32).filter(|x| g.is_identity(&g.pow(x, pk as i64))).count() as u64;
            let mut e = 0;
            let mut t = count;
            while t > 1 {
                t /= p;
                e += 1;
            }
            if e == *c.last().unwrap() {
                break;
            }
            c.push(e);
        }
        // Number of cyclic factors of order at least p^k is c[k] - c[k-1].
        let at_least: Vec<u32> = c.windows(2).map(|w| w[1] - w[0]).collect();
        for k in 1..=at_least.len() {
            let here = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
            for _ in 0..here {
                out.push(p.pow(k as u32));
            }
        }
    }
    out.sort_unstable();
    out
}

/// First entry of the list for `mode` isomorphic to `g`, with generator
/// images (empty for abelian entries, which are matched by invariants).
pub fn match_exceptional(g: &FiniteGroup, mode: Mode) -> Option<(&'static Exceptional, Vec<u32>)> {
    let hist = element_order_histogram(g);
    let abelian = is_abelian(g);
    for e in exception_list(mode.list()) {
        if e.order != g.len() || e.abelian != abelian {
            continue;
        }
        let model = e.model().ok()?;
        if element_order_histogram(&model) != hist {
            continue;
        }
        if abelian {
            // Finite abelian groups are determined by their order statistics.
            return Some((e, Vec::new()));
        }
        if let Some(images) = e.presentation().find_isomorphism(g) {
            return Some((e, images));
        }
    }
    None
}

fn finite_list_verdict(g: &FiniteGroup, mode: Mode) -> Option<Classification> {
    let (e, images) = match_exceptional(g, mode)?;
    let mut c = Classification::new(
        &g.name(),
        mode,
        Verdict::ExceptionFiniteList,
        format!("isomorphic to {} ({})", e.id, e.description),
    );
    c.exception_id = Some(e.id.to_string());
    c.witness = Some(if images.is_empty() {
        Witness::AbelianInvariants { invariants: abelian_invariants(g) }
    } else {
        Witness::Presentation {
            id: e.id.to_string(),
            images: e.generators.iter().zip(&images).map(|(&c, x)| (c, g.format(x))).collect(),
        }
    });
    Some(c)
}

/// Classification of a finite group against the exception list of `mode`.
pub fn classify_finite(g: &FiniteGroup, mode: Mode) -> Classification {
    let name = g.name();
    if g.len() == 1 {
        return Classification::new(&name, mode, Verdict::Admits, "trivial group");
    }
    match mode {
        Mode::Grr => {
            if is_abelian(g) {
                let inv = abelian_invariants(g);
                return match elementary_abelian_2_rank(g) {
                    Some(k) if k == 1 || k >= 5 => {
                        Classification::new(&name, mode, Verdict::Admits, format!("elementary abelian of rank {k}"))
                    }
                    _ => Classification::new(&name, mode, Verdict::ExceptionAbelian, "non-trivial abelian group")
                        .with_witness(Witness::AbelianInvariants { invariants: inv }),
                };
            }
            if let Some(w) = generalized_dicyclic_witness(g) {
                return Classification::new(&name, mode, Verdict::ExceptionGenDicyclic, "generalized dicyclic")
                    .with_witness(index_two(g, &w));
            }
        }
        Mode::Orr => {
            if let Some(w) = generalized_dihedral_witness(g) {
                return Classification::new(&name, mode, Verdict::ExceptionGenDihedral, "generalized dihedral")
                    .with_witness(index_two(g, &w));
            }
        }
        Mode::Drr => {}
    }
    finite_list_verdict(g, mode)
        .unwrap_or_else(|| Classification::new(&name, mode, Verdict::Admits, "not on the exception list"))
}

/// Classification of an infinite built-in family from its declared
/// metadata. Missing metadata gives `Unknown`, never a guess.
pub fn classify_declared(name: &str, info: FamilyInfo, mode: Mode) -> Classification {
    let unknown =
        |what: &str| Classification::new(name, mode, Verdict::Unknown, format!("{what} status is not declared"));
    let declared = |p: &str| Witness::Declared { property: p.to_string() };
    if info.finite {
        return unknown("finite group passed without a table;");
    }
    match mode {
        Mode::Grr => match (info.abelian, info.generalized_dicyclic) {
            (None, _) => unknown("abelian"),
            (Some(true), _) => Classification::new(name, mode, Verdict::ExceptionAbelian, "infinite abelian group")
                .with_witness(declared("abelian")),
            (_, None) => unknown("generalized dicyclic"),
            (_, Some(true)) => Classification::new(name, mode, Verdict::ExceptionGenDicyclic, "generalized dicyclic")
                .with_witness(declared("generalized dicyclic")),
            _ => Classification::new(name, mode, Verdict::Admits, "infinite, non-abelian, not generalized dicyclic"),
        },
        Mode::Drr => Classification::new(name, mode, Verdict::Admits, "every listed DRR exception is finite"),
        Mode::Orr => match info.generalized_dihedral {
            None => unknown("generalized dihedral"),
            Some(true) => Classification::new(name, mode, Verdict::ExceptionGenDihedral, "generalized dihedral")
                .with_witness(declared("generalized dihedral")),
            Some(false) => Classification::new(name, mode, Verdict::Admits, "infinite, not generalized dihedral"),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::library::{self, GRR_EXCEPTIONS, ORR_EXCEPTIONS};
    use crate::groups::presentation::Presentation;

    #[test]
    fn spec_examples() {
        let d4 = library::dihedral(8).unwrap();
        let c = classify_finite(&d4, Mode::Grr);
        assert_eq!(c.verdict, Verdict::ExceptionFiniteList);
        assert_eq!(c.exception_id.as_deref(), Some("[8,3]"));
        assert_eq!(classify_finite(&d4, Mode::Drr).verdict, Verdict::Admits);
        assert_eq!(classify_finite(&d4, Mode::Orr).verdict, Verdict::ExceptionGenDihedral);

        let z25 = library::elementary2(5).unwrap();
        assert_eq!(classify_finite(&z25, Mode::Grr).label, "ADMITS_GRR");
        let q8z3 = library::quaternion().direct_product(&library::cyclic(3).unwrap()).unwrap();
        let c = classify_finite(&q8z3, Mode::Grr);
        assert_eq!(c.verdict, Verdict::ExceptionFiniteList);
        assert_eq!(c.exception_id.as_deref(), Some("[24,11]"));

        let z33 = library::abelian(&[3, 3]).unwrap();
        assert_eq!(classify_finite(&z33, Mode::Drr).verdict, Verdict::ExceptionFiniteList);
        assert_eq!(classify_finite(&library::cyclic(5).unwrap(), Mode::Drr).verdict, Verdict::Admits);
    }

    #[test]
    fn q8_is_excluded_everywhere() {
        let q = library::quaternion();
        assert_eq!(classify_finite(&q, Mode::Grr).verdict, Verdict::ExceptionGenDicyclic);
        assert_eq!(classify_finite(&q, Mode::Drr).verdict, Verdict::ExceptionFiniteList);
        assert_eq!(classify_finite(&q, Mode::Orr).verdict, Verdict::ExceptionFiniteList);
    }

    #[test]
    fn abelian_cases() {
        assert_eq!(classify_finite(&library::cyclic(2).unwrap(), Mode::Grr).verdict, Verdict::Admits);
        assert_eq!(classify_finite(&library::elementary2(4).unwrap(), Mode::Grr).verdict, Verdict::ExceptionAbelian);
        assert_eq!(classify_finite(&library::cyclic(1).unwrap(), Mode::Grr).verdict, Verdict::Admits);
        assert_eq!(abelian_invariants(&library::abelian(&[4, 6]).unwrap()), vec![2, 3, 4]);
        assert_eq!(abelian_invariants(&library::abelian(&[8, 2, 9]).unwrap()), vec![2, 8, 9]);
    }

    #[test]
    fn every_grr_model_matches_its_own_id() {
        for e in GRR_EXCEPTIONS {
            let g = e.model().unwrap().with_name("anonymous");
            let c = classify_finite(&g, Mode::Grr);
            assert_eq!(c.verdict, Verdict::ExceptionFiniteList, "{}", e.id);
            assert_eq!(c.exception_id.as_deref(), Some(e.id));
            if let Some(Witness::Presentation { images, .. }) = &c.witness {
                let imgs: Vec<u32> = e.generators.iter().map(|ch| g.parse(&images[ch]).unwrap()).collect();
                assert!(e.presentation().satisfied_by(&g, &imgs));
            } else {
                panic!("expected presentation witness");
            }
        }
    }

    #[test]
    fn orr_models_classify_as_exceptions() {
        for e in ORR_EXCEPTIONS {
            let g = e.model().unwrap();
            let c = classify_finite(&g, Mode::Orr);
            assert_eq!(c.verdict, Verdict::ExceptionFiniteList, "{}", e.id);
        }
    }

    #[test]
    fn isomorphic_copies_in_other_clothes() {
        // D3 as S3 and the [18,4] group as a permutation group.
        let s3 = library::symmetric(3).unwrap();
        assert_eq!(classify_finite(&s3, Mode::Grr).exception_id.as_deref(), Some("[6,1]"));
        let p = Presentation::new(&['r', 's'], &["r^3", "s^2", "(rs)^2"], 6).unwrap();
        assert!(p.find_isomorphism(&s3).is_some());
        // S4 and D6 (order 12) admit GRRs.
        assert_eq!(classify_finite(&library::symmetric(4).unwrap(), Mode::Grr).verdict, Verdict::Admits);
        assert_eq!(classify_finite(&library::dihedral(12).unwrap(), Mode::Grr).verdict, Verdict::Admits);
    }

    #[test]
    fn declared_families() {
        let info = FamilyInfo {
            finite: false,
            abelian: Some(false),
            virtually_abelian: Some(false),
            torsion: Some(false),
            generalized_dicyclic: Some(false),
            generalized_dihedral: Some(false),
        };
        assert_eq!(classify_declared("free:2", info, Mode::Grr).label, "ADMITS_GRR");
        let unknown = FamilyInfo { abelian: None, ..info };
        assert_eq!(classify_declared("x", unknown, Mode::Grr).verdict, Verdict::Unknown);
        let dinf = FamilyInfo { generalized_dihedral: Some(true), ..info };
        assert_eq!(classify_declared("dinf", dinf, Mode::Orr).verdict, Verdict::ExceptionGenDihedral);
    }
}
