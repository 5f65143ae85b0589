//! Built-in diagrams.

use crate::error::{Error, Result};

use super::diagram::{parse_diagram, Diagram};

const UNKNOT: &str = "U(0)\nA(0)\n";

const UNKNOT_POS: &str = "\
U(0)
|0 |0 U(0)
|0 X+(0,0) |0
A(0) A(0)
";

const UNKNOT_NEG: &str = "\
U(0)
|0 |0 U(0)
|0 X-(0,0) |0
A(0) A(0)
";

const HOPF: &str = "\
U(0) U(1)
|0^ X+(0,1) |1_
|0 X+(1,0) |1
A(0) A(1)
";

// left-handed: three negative crossings, writhe -3
const TREFOIL: &str = "\
U(0)
|0 |0 U(0)
|0 X-(0,0) |0
|0 X-(0,0) |0
|0 X-(0,0) |0
A(0) A(0)
";

const BORROMEAN: &str = "\
# closure of (s1 s2^-1)^3
U(0)
|0 U(1) |0
|0 |1 U(2) |1 |0
X+(0,1) |2 |2 |1 |0
|1 X-(0,2) |2 |1 |0
X+(1,2) |0 |2 |1 |0
|2 X-(1,0) |2 |1 |0
X+(2,0) |1 |2 |1 |0
|0 X-(2,1) |2 |1 |0
|0 |1 A(2) |1 |0
|0 A(1) |0
A(0)
";

pub const BUILTIN_NAMES: [&str; 6] = [
    "unknot",
    "unknot+1",
    "unknot-1",
    "hopf",
    "trefoil",
    "borromean",
];

/// Text of a built-in diagram.
pub fn builtin_text(name: &str) -> Result<&'static str> {
    Ok(match name {
        "unknot" => UNKNOT,
        "unknot+1" => UNKNOT_POS,
        "unknot-1" => UNKNOT_NEG,
        "hopf" => HOPF,
        "trefoil" => TREFOIL,
        "borromean" => BORROMEAN,
        other => return Err(Error::UnknownName(other.to_string())),
    })
}

/// Parsed built-in diagram.
pub fn builtin(name: &str) -> Result<Diagram> {
    parse_diagram(builtin_text(name)?)
}
