//! Bundled diagrams and systems.

use crate::algebra::{permutations, standard_quandle, GroupTable, OperationTable, QuandleKind};
use crate::diagram::{parse_diagram, Diagram};
use crate::error::{Error, Result};
use crate::family::{axet_to_system, AxetData, SystemData};

pub const UNKNOT: &str = "arcs 1\n";

pub const TREFOIL: &str = "\
arcs 3
crossing over=0 under_in=1 under_out=2 sign=+
crossing over=1 under_in=2 under_out=0 sign=+
crossing over=2 under_in=0 under_out=1 sign=+
";

pub const HOPF: &str = "\
arcs 2
crossing over=1 under_in=0 under_out=0 sign=+
crossing over=0 under_in=1 under_out=1 sign=+
";

pub const THETA: &str = "\
arcs 3
vertex ends=0:in,1:in,2:out
vertex ends=2:in,1:out,0:out
";

/// Man with linked fingers; arcs a, b, c, d, f are 0..=4.
pub const MLF: &str = "\
# a=0 b=1 c=2 d=3 f=4
arcs 5
crossing over=2 under_in=0 under_out=3 sign=+
crossing over=3 under_in=2 under_out=4 sign=+
vertex ends=0:out,3:in,1:out
vertex ends=1:in,4:in,2:out
";

/// Man with unlinked fingers; arcs a, b, c are 0..=2.
pub const MUF: &str = "\
# a=0 b=1 c=2
arcs 3
vertex ends=0:in,1:out,0:out
vertex ends=2:out,1:in,2:in
";

/// Man with watch and linked fingers; arcs a, b, c, d, f, g, h are 0..=6.
pub const MWF: &str = "\
# a=0 b=1 c=2 d=3 f=4 g=5 h=6
arcs 7
crossing over=2 under_in=0 under_out=3 sign=+
crossing over=3 under_in=2 under_out=4 sign=+
crossing over=6 under_in=1 under_out=5 sign=+
crossing over=1 under_in=6 under_out=6 sign=+
vertex ends=0:out,3:in,1:out
vertex ends=5:in,4:in,2:out
";

/// Man with watch and unlinked fingers; arcs a, b, c, h are 0..=3.
pub const MWUF: &str = "\
# a=0 b=1 c=2 h=3
arcs 4
vertex ends=0:in,1:in,0:out
vertex ends=1:out,2:in,2:out
loop 3
";

/// Two hands, each linked with a common hoop.
pub const ATHLETE_HAPPY: &str = "\
# hands 0,1 and 3,4; arm 2; hoop 5,6
arcs 7
crossing over=5 under_in=0 under_out=1 sign=+
crossing over=0 under_in=5 under_out=6 sign=+
crossing over=6 under_in=3 under_out=4 sign=+
crossing over=3 under_in=6 under_out=5 sign=+
vertex ends=0:out,1:in,2:out
vertex ends=2:in,3:out,4:in
";

/// One hand linked with the hoop, the other free.
pub const ATHLETE_UNHAPPY: &str = "\
# hands 0,1 and 3; arm 2; hoop 4
arcs 5
crossing over=4 under_in=0 under_out=1 sign=+
crossing over=0 under_in=4 under_out=4 sign=+
vertex ends=0:out,1:in,2:out
vertex ends=2:in,3:out,3:in
";

pub const DIAGRAM_NAMES: &[&str] = &[
    "unknot",
    "trefoil",
    "hopf",
    "theta",
    "mlf",
    "muf",
    "mwf",
    "mwuf",
    "athlete-happy",
    "athlete-unhappy",
];

pub fn diagram_text(name: &str) -> Result<&'static str> {
    Ok(match name {
        "unknot" => UNKNOT,
        "trefoil" => TREFOIL,
        "hopf" => HOPF,
        "theta" => THETA,
        "mlf" => MLF,
        "muf" => MUF,
        "mwf" => MWF,
        "mwuf" => MWUF,
        "athlete-happy" => ATHLETE_HAPPY,
        "athlete-unhappy" => ATHLETE_UNHAPPY,
        _ => return Err(Error::UnknownResource(format!("fixtures:{name}"))),
    })
}

pub fn diagram(name: &str) -> Result<Diagram> {
    parse_diagram(diagram_text(name)?)
}

pub const SYSTEM_NAMES: &[&str] = &["t3r3z2", "t2t2z2", "r3", "conj-s3", "axet-s3", "broken-tc4"];

fn quandle(kind: QuandleKind) -> OperationTable {
    standard_quandle(&kind).expect("standard quandle")
}

/// `S = Z2`, `G = S3` on three points, `τ_x(1)` the transposition fixing `x`.
pub fn s3_axet() -> AxetData {
    let perms = permutations(3);
    let fixing = |x: usize| {
        perms
            .iter()
            .position(|p| p[x] == x && *p != [0, 1, 2])
            .expect("transposition")
    };
    AxetData {
        s_group: GroupTable::cyclic(2),
        g_group: GroupTable::symmetric(3),
        x_size: 3,
        action: perms.clone(),
        tau: (0..3).map(|x| vec![0, fixing(x)]).collect(),
    }
}

/// Bundled systems:
///
/// * `t3r3z2` - the Z2-family with `*_0 = T3`, `*_1 = R3`;
/// * `t2t2z2` - the Z2-family of two trivial quandles of order 2;
/// * `r3` - `R3` over the trivial group, for bare quandle colourings;
/// * `conj-s3` - one-point `X` over `S3`, colourings are `S3`-representations;
/// * `axet-s3` - the system of [`s3_axet`];
/// * `broken-tc4` - trivalent data failing only the additivity of `f`.
pub fn system(name: &str) -> Result<SystemData> {
    match name {
        "t3r3z2" => SystemData::g_family(
            GroupTable::cyclic(2),
            vec![quandle(QuandleKind::Trivial(3)), quandle(QuandleKind::Dihedral(3))],
        ),
        "t2t2z2" => SystemData::g_family(GroupTable::cyclic(2), vec![quandle(QuandleKind::Trivial(2)); 2]),
        "r3" => SystemData::new(
            vec![quandle(QuandleKind::Dihedral(3))],
            vec![vec![0]],
            quandle(QuandleKind::Trivial(1)),
        ),
        "conj-s3" => SystemData::g_family(GroupTable::symmetric(3), vec![quandle(QuandleKind::Trivial(1)); 6]),
        "axet-s3" => axet_to_system(&s3_axet()).map(|(s, _)| s),
        "broken-tc4" => broken_tc4(),
        _ => Err(Error::UnknownResource(format!("systems:{name}"))),
    }
}

fn broken_tc4() -> Result<SystemData> {
    let z2 = GroupTable::cyclic(2);
    SystemData::new(
        vec![quandle(QuandleKind::Trivial(3)), quandle(QuandleKind::Dihedral(3))],
        vec![vec![1, 1], vec![1, 1]],
        quandle(QuandleKind::Trivial(2)),
    )?
    .with_oplus(z2.table().clone())?
    .with_rho(vec![vec![0, 1]; 3])
}
