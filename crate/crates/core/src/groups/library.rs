//! Concrete finite groups: standard families and models of every group on
//! the GRR, DRR and ORR exception lists.

use super::perm::Perm;
use super::presentation::Presentation;
use super::{FiniteGroup, Group};
use crate::error::{Error, Result};

fn join_tuple(v: &[u32]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// `Z/n1 x ... x Z/nk`, elements labelled as tuples (a bare residue when
/// `k = 1`).
pub fn abelian(invariants: &[u32]) -> Result<FiniteGroup> {
    if invariants.is_empty() || invariants.contains(&0) {
        return Err(Error::Malformed("abelian invariants must be positive".into()));
    }
    let k = invariants.len();
    let gens: Vec<Vec<u32>> = (0..k)
        .filter(|&i| invariants[i] > 1)
        .map(|i| {
            let mut v = vec![0; k];
            v[i] = 1;
            v
        })
        .collect();
    let inv = invariants.to_vec();
    let name = invariants.iter().map(|n| format!("Z{n}")).collect::<Vec<_>>().join("x");
    FiniteGroup::generate(
        name,
        vec![0u32; k],
        &gens,
        move |a, b| a.iter().zip(b).zip(&inv).map(|((x, y), n)| (x + y) % n).collect(),
        |v| if v.len() == 1 { v[0].to_string() } else { join_tuple(v) },
    )
}

pub fn cyclic(n: u32) -> Result<FiniteGroup> {
    abelian(&[n])
}

pub fn elementary2(k: u32) -> Result<FiniteGroup> {
    if k == 0 {
        return Err(Error::Malformed("elementary2 rank must be positive".into()));
    }
    Ok(abelian(&vec![2; k as usize])?.with_name(format!("Z2^{k}")))
}

fn dihedral_label(k: u32, flip: bool) -> String {
    let r = match k {
        0 => String::new(),
        1 => "r".into(),
        _ => format!("r^{k}"),
    };
    match (r.is_empty(), flip) {
        (true, false) => "1".into(),
        (_, true) => format!("{r}s"),
        (false, false) => r,
    }
}

/// Dihedral group of the given order (`2n`), with rotation `r` and
/// reflection `s`; elements are `r^k` and `r^k s`.
pub fn dihedral(order: u32) -> Result<FiniteGroup> {
    if order < 2 || !order.is_multiple_of(2) {
        return Err(Error::Malformed(format!("dihedral order {order} must be even")));
    }
    let n = order / 2;
    let mut gens = vec![];
    if n > 1 {
        gens.push((1 % n, false));
    }
    gens.push((0, true));
    FiniteGroup::generate(
        format!("D{n}"),
        (0u32, false),
        &gens,
        move |&(a, f), &(b, g)| ((if f { a + n - b } else { a + b }) % n, f ^ g),
        |&(k, f)| dihedral_label(k, f),
    )
}

/// Quaternion group `{±1, ±i, ±j, ±k}`.
pub fn quaternion() -> FiniteGroup {
    // Units 0..4 stand for 1, i, j, k.
    fn unit_mul(u: u8, v: u8) -> (bool, u8) {
        match (u, v) {
            (0, v) => (false, v),
            (u, 0) => (false, u),
            (u, v) if u == v => (true, 0),
            (u, v) => (((v + 3 - u) % 3) != 1, 6 - u - v),
        }
    }
    let label = |&(neg, u): &(bool, u8)| {
        let name = ["1", "i", "j", "k"][u as usize];
        if neg {
            format!("-{name}")
        } else {
            name.to_string()
        }
    };
    FiniteGroup::generate(
        "Q8",
        (false, 0u8),
        &[(false, 1), (false, 2)],
        |&(s, u), &(t, v)| {
            let (n, w) = unit_mul(u, v);
            (s ^ t ^ n, w)
        },
        label,
    )
    .expect("Q8 has 8 elements")
}

/// Symmetric group on `{1..n}`.
pub fn symmetric(n: u32) -> Result<FiniteGroup> {
    if n == 0 || n > 6 {
        return Err(Error::Unsupported(format!("symmetric:{n} (supported 1..=6)")));
    }
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Perm::parse_cycles("(1,2)", n as usize)?);
    }
    if n >= 3 {
        let cyc: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        gens.push(Perm::parse_cycles(&format!("({})", cyc.join(",")), n as usize)?);
    }
    if gens.is_empty() {
        gens.push(Perm::identity(1));
    }
    FiniteGroup::from_perms(format!("S{n}"), &gens)
}

/// Alternating group on `{1..n}`.
pub fn alternating(n: u32) -> Result<FiniteGroup> {
    if n == 0 || n > 7 {
        return Err(Error::Unsupported(format!("alternating:{n} (supported 1..=7)")));
    }
    let mut gens: Vec<Perm> =
        (3..=n).map(|k| Perm::parse_cycles(&format!("(1,2,{k})"), n as usize)).collect::<Result<_>>()?;
    if gens.is_empty() {
        gens.push(Perm::identity(n as usize));
    }
    FiniteGroup::from_perms(format!("A{n}"), &gens)
}

/// Dicyclic group of order `4m`: `<a, x | a^2m = 1, x^2 = a^m, x a x^-1 = a^-1>`.
pub fn dicyclic(order: u32) -> Result<FiniteGroup> {
    if order < 4 || !order.is_multiple_of(4) {
        return Err(Error::Malformed(format!("dicyclic order {order} must be a multiple of 4")));
    }
    let m = order / 4;
    let n = 2 * m;
    FiniteGroup::generate(
        format!("Dic{m}"),
        (0u32, false),
        &[(1 % n, false), (0, true)],
        move |&(k, e), &(l, f)| match (e, f) {
            (false, _) => ((k + l) % n, f),
            (true, false) => ((k + n - l) % n, true),
            (true, true) => ((k + n - l + m) % n, false),
        },
        |&(k, e)| {
            let a = match k {
                0 => String::new(),
                1 => "a".into(),
                _ => format!("a^{k}"),
            };
            match (a.is_empty(), e) {
                (true, false) => "1".into(),
                (_, true) => format!("{a}x"),
                (false, false) => a,
            }
        },
    )
}

/// Pauli group generated by `X, Y, Z`; elements are `phase * P`.
fn pauli16() -> Result<FiniteGroup> {
    // Paulis 0..4 are I, X, Y, Z; the phase counts powers of i.
    fn pmul(u: u8, v: u8) -> (u8, u8) {
        match (u, v) {
            (0, v) => (0, v),
            (u, 0) => (0, u),
            (u, v) if u == v => (0, 0),
            (u, v) => (if (v + 3 - u) % 3 == 1 { 1 } else { 3 }, 6 - u - v),
        }
    }
    FiniteGroup::generate(
        "Pauli16",
        (0u8, 0u8),
        &[(0, 1), (0, 2), (0, 3)],
        |&(p, u), &(q, v)| {
            let (r, w) = pmul(u, v);
            ((p + q + r) % 4, w)
        },
        |&(p, u)| format!("{}{}", ["", "i", "-", "-i"][p as usize], ["I", "X", "Y", "Z"][u as usize]),
    )
}

/// Affine maps `x -> m x + t` on Z/8 with `m` in {1, 5}.
fn affine_z8() -> Result<FiniteGroup> {
    FiniteGroup::generate(
        "Z8:Z2",
        (1u32, 0u32),
        &[(1, 1), (5, 0)],
        |&(m1, t1), &(m2, t2)| ((m1 * m2) % 8, (m1 * t2 + t1) % 8),
        |&(m, t)| match m {
            1 => format!("x+{t}"),
            _ => format!("{m}x+{t}"),
        },
    )
}

/// Maps `v -> ±v + t` on (Z/3)^2.
fn signed_translations_z3sq() -> Result<FiniteGroup> {
    FiniteGroup::generate(
        "Z3^2:Z2",
        (false, 0u32, 0u32),
        &[(false, 1, 0), (false, 0, 1), (true, 0, 0)],
        |&(e1, x1, y1), &(e2, x2, y2)| {
            let (x2, y2) = if e1 { ((3 - x2) % 3, (3 - y2) % 3) } else { (x2, y2) };
            (e1 ^ e2, (x1 + x2) % 3, (y1 + y2) % 3)
        },
        |&(e, x, y)| format!("{}v+({x},{y})", if e { "-" } else { "" }),
    )
}

/// Heisenberg group over Z/3.
fn heisenberg_mod3() -> Result<FiniteGroup> {
    FiniteGroup::generate(
        "Heis3",
        [0u32; 3],
        &[[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        |a, b| [(a[0] + b[0]) % 3, (a[1] + b[1]) % 3, (a[2] + b[2] + a[0] * b[1]) % 3],
        |a| format!("[{},{},{}]", a[0], a[1], a[2]),
    )
}

/// Central product of two dihedral groups of order 8, realised as the real
/// two-qubit Pauli group `±X^x Z^z`.
fn central_product_d4_d4() -> Result<FiniteGroup> {
    // (sign, x bits, z bits)
    let xz = |x: u8, z: u8| (false, x, z);
    FiniteGroup::generate(
        "D4oD4",
        (false, 0u8, 0u8),
        &[xz(1, 1), xz(1, 0), xz(2, 2), xz(2, 0)],
        |&(s, x1, z1), &(t, x2, z2)| (s ^ t ^ ((z1 & x2).count_ones() % 2 == 1), x1 ^ x2, z1 ^ z2),
        |&(s, x, z)| {
            let mut out = String::from(if s { "-" } else { "" });
            for q in 0..2 {
                out.push(match ((x >> q) & 1, (z >> q) & 1) {
                    (0, 0) => 'I',
                    (1, 0) => 'X',
                    (0, 1) => 'Z',
                    _ => 'W',
                });
            }
            out
        },
    )
}

fn a4_model() -> Result<FiniteGroup> {
    let g = alternating(4)?;
    let gens = vec![g.parse("(1,2,3)")?, g.parse("(1,2)(3,4)")?];
    Ok(g.with_generators(gens))
}

fn from_zero_based_cycles(name: &str, degree: usize, gens: &[&[&[u32]]]) -> Result<FiniteGroup> {
    let perms: Vec<Perm> = gens
        .iter()
        .map(|cycles| {
            let mut images: Vec<u32> = (0..degree as u32).collect();
            for c in *cycles {
                for (i, &p) in c.iter().enumerate() {
                    images[p as usize] = c[(i + 1) % c.len()];
                }
            }
            Perm::from_images(images)
        })
        .collect::<Result<_>>()?;
    FiniteGroup::from_perms(name, &perms)
}

fn orr16a() -> Result<FiniteGroup> {
    from_zero_based_cycles(
        "ORR16a",
        16,
        &[
            &[&[0, 1, 5, 2], &[3, 9, 11, 7], &[4, 8, 12, 6], &[10, 13, 15, 14]],
            &[&[0, 3, 10, 4], &[1, 6, 13, 7], &[2, 8, 14, 9], &[5, 11, 15, 12]],
        ],
    )
}

fn orr16b() -> Result<FiniteGroup> {
    from_zero_based_cycles(
        "ORR16b",
        16,
        &[
            &[&[0, 1, 7, 2], &[3, 8, 4, 9], &[5, 10, 6, 11], &[12, 14, 13, 15]],
            &[&[0, 3, 7, 4], &[1, 8, 2, 9], &[5, 12, 6, 13], &[10, 14, 11, 15]],
            &[&[0, 5, 7, 6], &[1, 10, 2, 11], &[3, 12, 4, 13], &[8, 14, 9, 15]],
        ],
    )
}

fn orr32() -> Result<FiniteGroup> {
    from_zero_based_cycles(
        "ORR32",
        32,
        &[
            &[
                &[0, 1, 7, 2],
                &[3, 13, 22, 9],
                &[4, 12, 23, 8],
                &[5, 15, 24, 11],
                &[6, 14, 25, 10],
                &[16, 26, 21, 31],
                &[17, 30, 20, 27],
                &[18, 29, 19, 28],
            ],
            &[
                &[0, 3, 16, 4],
                &[1, 8, 26, 9],
                &[2, 12, 31, 13],
                &[5, 20, 25, 18],
                &[6, 19, 24, 17],
                &[7, 22, 21, 23],
                &[10, 30, 15, 28],
                &[11, 29, 14, 27],
            ],
            &[
                &[0, 5, 21, 6],
                &[1, 10, 31, 11],
                &[2, 14, 26, 15],
                &[3, 17, 23, 18],
                &[4, 19, 22, 20],
                &[7, 24, 16, 25],
                &[8, 27, 13, 28],
                &[9, 29, 12, 30],
            ],
        ],
    )
}

/// Which exception list an entry belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ListKind {
    Grr,
    Drr,
    Orr,
}

/// One group on an exception list: a concrete model plus a presentation
/// whose generators correspond to the model's declared generators.
pub struct Exceptional {
    pub id: &'static str,
    pub description: &'static str,
    pub order: usize,
    pub abelian: bool,
    pub generators: &'static [char],
    pub relators: &'static [&'static str],
    build: fn() -> Result<FiniteGroup>,
}

impl Exceptional {
    pub fn model(&self) -> Result<FiniteGroup> {
        Ok((self.build)()?.with_name(self.id))
    }

    pub fn presentation(&self) -> Presentation {
        Presentation::new(self.generators, self.relators, self.order).expect("stored presentations parse")
    }
}

const Q8_REL: &[&str] = &["i^4", "i^2J^2", "Jiji"];

fn q8_model() -> Result<FiniteGroup> {
    Ok(quaternion())
}

macro_rules! ex {
    ($id:expr, $desc:expr, $order:expr, $ab:expr, $gens:expr, $rels:expr, $build:expr) => {
        Exceptional {
            id: $id,
            description: $desc,
            order: $order,
            abelian: $ab,
            generators: $gens,
            relators: $rels,
            build: $build,
        }
    };
}

/// The ten finite groups on the GRR exception list, by GAP id.
pub static GRR_EXCEPTIONS: &[Exceptional] = &[
    ex!("[6,1]", "dihedral group of order 6", 6, false, &['r', 's'], &["r^3", "s^2", "(rs)^2"], || dihedral(6)),
    ex!("[8,3]", "dihedral group of order 8", 8, false, &['r', 's'], &["r^4", "s^2", "(rs)^2"], || dihedral(8)),
    ex!("[10,1]", "dihedral group of order 10", 10, false, &['r', 's'], &["r^5", "s^2", "(rs)^2"], || dihedral(10)),
    ex!("[12,3]", "alternating group A4", 12, false, &['a', 'b'], &["a^3", "b^2", "(ab)^3"], a4_model),
    ex!(
        "[24,11]",
        "Q8 x Z/3",
        24,
        false,
        &['i', 'j', 'z'],
        &["i^4", "i^2J^2", "Jiji", "z^3", "[i,z]", "[j,z]"],
        || quaternion().direct_product(&cyclic(3)?)
    ),
    ex!(
        "[32,26]",
        "Q8 x Z/4",
        32,
        false,
        &['i', 'j', 'z'],
        &["i^4", "i^2J^2", "Jiji", "z^4", "[i,z]", "[j,z]"],
        || quaternion().direct_product(&cyclic(4)?)
    ),
    ex!(
        "[16,13]",
        "<a,b,c | a^2=b^2=c^2=1, abc=bca=cab>",
        16,
        false,
        &['a', 'b', 'c'],
        &["a^2", "b^2", "c^2", "abc=bca=cab"],
        pauli16
    ),
    ex!("[16,6]", "<a,b | a^8=b^2=1, b^-1ab=a^5>", 16, false, &['a', 'b'], &["a^8", "b^2", "Bab=a^5"], affine_z8),
    ex!(
        "[18,4]",
        "<a,b,c | a^3=b^3=c^2=(ac)^2=(bc)^2=1, ab=ba>",
        18,
        false,
        &['a', 'b', 'c'],
        &["a^3", "b^3", "c^2", "(ac)^2", "(bc)^2", "ab=ba"],
        signed_translations_z3sq
    ),
    ex!(
        "[27,3]",
        "<a,b,c | a^3=b^3=c^3=1, ac=ca, bc=cb, b^-1ab=ac>",
        27,
        false,
        &['a', 'b', 'c'],
        &["a^3", "b^3", "c^3", "ac=ca", "bc=cb", "Bab=ac"],
        heisenberg_mod3
    ),
];

/// The five finite groups without a DRR.
pub static DRR_EXCEPTIONS: &[Exceptional] = &[
    ex!("Q8", "quaternion group", 8, false, &['i', 'j'], Q8_REL, q8_model),
    ex!("Z2^2", "(Z/2)^2", 4, true, &['a', 'b'], &["a^2", "b^2", "[a,b]"], || elementary2(2)),
    ex!("Z2^3", "(Z/2)^3", 8, true, &['a', 'b', 'c'], &["a^2", "b^2", "c^2", "[a,b]", "[a,c]", "[b,c]"], || {
        elementary2(3)
    }),
    ex!(
        "Z2^4",
        "(Z/2)^4",
        16,
        true,
        &['a', 'b', 'c', 'd'],
        &["a^2", "b^2", "c^2", "d^2", "[a,b]", "[a,c]", "[a,d]", "[b,c]", "[b,d]", "[c,d]"],
        || elementary2(4)
    ),
    ex!("Z3^2", "(Z/3)^2", 9, true, &['a', 'b'], &["a^3", "b^3", "[a,b]"], || abelian(&[3, 3])),
];

/// The eleven finite groups without an ORR that are not generalized dihedral.
pub static ORR_EXCEPTIONS: &[Exceptional] = &[
    ex!("Q8", "quaternion group", 8, false, &['i', 'j'], Q8_REL, q8_model),
    ex!("Z4xZ2", "Z/4 x Z/2", 8, true, &['a', 'b'], &["a^4", "b^2", "[a,b]"], || abelian(&[4, 2])),
    ex!(
        "Z4xZ2^2",
        "Z/4 x (Z/2)^2",
        16,
        true,
        &['a', 'b', 'c'],
        &["a^4", "b^2", "c^2", "[a,b]", "[a,c]", "[b,c]"],
        || abelian(&[4, 2, 2])
    ),
    ex!(
        "Z4xZ2^3",
        "Z/4 x (Z/2)^3",
        32,
        true,
        &['a', 'b', 'c', 'd'],
        &["a^4", "b^2", "c^2", "d^2", "[a,b]", "[a,c]", "[a,d]", "[b,c]", "[b,d]", "[c,d]"],
        || abelian(&[4, 2, 2, 2])
    ),
    ex!(
        "Z4xZ2^4",
        "Z/4 x (Z/2)^4",
        64,
        true,
        &['a', 'b', 'c', 'd', 'e'],
        &[
            "a^4", "b^2", "c^2", "d^2", "e^2", "[a,b]", "[a,c]", "[a,d]", "[a,e]", "[b,c]", "[b,d]", "[b,e]", "[c,d]",
            "[c,e]", "[d,e]"
        ],
        || abelian(&[4, 2, 2, 2, 2])
    ),
    ex!("Z3^2", "(Z/3)^2", 9, true, &['a', 'b'], &["a^3", "b^3", "[a,b]"], || abelian(&[3, 3])),
    ex!(
        "Z3xZ2^3",
        "Z/3 x (Z/2)^3",
        24,
        true,
        &['a', 'b', 'c', 'd'],
        &["a^3", "b^2", "c^2", "d^2", "[a,b]", "[a,c]", "[a,d]", "[b,c]", "[b,d]", "[c,d]"],
        || abelian(&[3, 2, 2, 2])
    ),
    ex!(
        "D4oD4",
        "central product of two dihedral groups of order 8",
        32,
        false,
        &['a', 'b', 'c', 'd'],
        &["a^4", "b^2", "(ab)^2", "c^4", "d^2", "(cd)^2", "a^2C^2", "[a,c]", "[a,d]", "[b,c]", "[b,d]"],
        central_product_d4_d4
    ),
    ex!(
        "ORR16a",
        "<a,b | a^4=b^4=(ab)^2=(ab^-1)^2=1>",
        16,
        false,
        &['a', 'b'],
        &["a^4", "b^4", "(ab)^2", "(aB)^2"],
        orr16a
    ),
    ex!(
        "ORR16b",
        "<a,b,c | a^4=b^4=c^4=(ba)^2=(ba^-1)^2=(bc)^2=(bc^-1)^2=a^2c^-2=a^2b^-2=cac^-1a^-1=1>",
        16,
        true,
        &['a', 'b', 'c'],
        &["a^4", "b^4", "c^4", "(ba)^2", "(bA)^2", "(bc)^2", "(bC)^2", "a^2C^2", "a^2B^2", "caCA"],
        orr16b
    ),
    ex!(
        "ORR32",
        "<a,b,c | a^4=b^4=c^4=(ab)^2=(ab^-1)^2=(ac)^2=(ac^-1)^2=(bc)^2=(bc^-1)^2=a^2b^2c^2=1>",
        32,
        false,
        &['a', 'b', 'c'],
        &["a^4", "b^4", "c^4", "(ab)^2", "(aB)^2", "(ac)^2", "(aC)^2", "(bc)^2", "(bC)^2", "a^2b^2c^2"],
        orr32
    ),
];

pub fn exception_list(kind: ListKind) -> &'static [Exceptional] {
    match kind {
        ListKind::Grr => GRR_EXCEPTIONS,
        ListKind::Drr => DRR_EXCEPTIONS,
        ListKind::Orr => ORR_EXCEPTIONS,
    }
}

/// Finds an exceptional entry by id (case-insensitive; GAP ids may be given
/// as `16,13` or `[16,13]`).
pub fn exceptional_by_id(id: &str) -> Option<&'static Exceptional> {
    let norm = |s: &str| s.trim().trim_start_matches('[').trim_end_matches(']').replace(' ', "").to_lowercase();
    let want = norm(id);
    GRR_EXCEPTIONS.iter().chain(DRR_EXCEPTIONS).chain(ORR_EXCEPTIONS).find(|e| norm(e.id) == want)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::structure::{element_order_histogram, is_abelian};
    use crate::groups::Group;

    #[test]
    fn family_orders() {
        assert_eq!(cyclic(7).unwrap().len(), 7);
        assert_eq!(dihedral(12).unwrap().len(), 12);
        assert_eq!(symmetric(4).unwrap().len(), 24);
        assert_eq!(alternating(4).unwrap().len(), 12);
        assert_eq!(dicyclic(12).unwrap().len(), 12);
        assert_eq!(elementary2(5).unwrap().len(), 32);
        assert_eq!(quaternion().len(), 8);
        assert!(dihedral(7).is_err());
        assert!(dicyclic(6).is_err());
    }

    #[test]
    fn dihedral_labels_parse() {
        let d = dihedral(8).unwrap();
        let r = d.parse("r").unwrap();
        let s = d.parse("s").unwrap();
        assert_eq!(d.format(&d.mul(&r, &s)), "rs");
        assert_eq!(d.format(&d.mul(&s, &r)), "r^3s");
        assert_eq!(d.element_order(&r, 10), Some(4));
    }

    #[test]
    fn quaternion_relations() {
        let q = quaternion();
        let (i, j, k) = (q.parse("i").unwrap(), q.parse("j").unwrap(), q.parse("k").unwrap());
        assert_eq!(q.mul(&i, &j), k);
        assert_eq!(q.format(&q.mul(&j, &i)), "-k");
        assert_eq!(q.format(&q.mul(&i, &i)), "-1");
    }

    #[test]
    fn stored_models_satisfy_presentations() {
        for kind in [ListKind::Grr, ListKind::Drr, ListKind::Orr] {
            for e in exception_list(kind) {
                let g = e.model().unwrap();
                assert_eq!(g.len(), e.order, "{}", e.id);
                let gens = g.generators();
                let p = e.presentation();
                assert!(p.satisfied_by(&g, &gens), "{} relators fail on the model", e.id);
                assert_eq!(g.subgroup(&gens).len(), g.len(), "{}", e.id);
                assert_eq!(is_abelian(&g), e.abelian, "{}", e.id);
            }
        }
    }

    #[test]
    fn exceptional_lists_have_paper_sizes() {
        assert_eq!(GRR_EXCEPTIONS.len(), 10);
        assert_eq!(DRR_EXCEPTIONS.len(), 5);
        assert_eq!(ORR_EXCEPTIONS.len(), 11);
        let orders: Vec<usize> = GRR_EXCEPTIONS.iter().map(|e| e.order).collect();
        assert_eq!(orders, vec![6, 8, 10, 12, 24, 32, 16, 16, 18, 27]);
    }

    #[test]
    fn second_orr_presentation_is_abelian() {
        let b = exceptional_by_id("ORR16b").unwrap().model().unwrap();
        let c = abelian(&[4, 2, 2]).unwrap();
        assert_eq!(element_order_histogram(&b), element_order_histogram(&c));
    }

    #[test]
    fn lookup_by_id() {
        assert_eq!(exceptional_by_id("16,6").unwrap().order, 16);
        assert_eq!(exceptional_by_id("[27,3]").unwrap().order, 27);
        assert!(exceptional_by_id("nope").is_none());
    }
}
