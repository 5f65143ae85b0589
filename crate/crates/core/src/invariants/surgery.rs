//! The unified invariant `J_M` from surgery presentations.

use std::path::Path;

use rayon::prelude::*;

use crate::basis::{omega_coeff, v_expansion, BasisTag};
use crate::error::{Error, Result};
use crate::habiro::HabiroElem;
use crate::ring::qcomb::{falling_bal, pochhammer, qfact_bal, qint_bal};
use crate::ring::Laurent;
use crate::tangle::{builtin, colored_jones, parse_diagram, Diagram};

/// An integral homology sphere given by surgery.
#[derive(Clone, Debug)]
pub enum SurgeryPresentation {
    /// Surgery on an algebraically split link with framings `±1`.
    Diagram {
        diagram: Diagram,
        framings: Vec<i64>,
    },
    /// `M_{i,j,k}`: surgery on the Borromean rings with framings
    /// `-1/i, -1/j, -1/k`; a parameter 0 leaves that component alone.
    Borromean { params: [i64; 3] },
}

/// Checks that `framings` are `±1` and the linking matrix is diagonal.
pub fn check_admissible(d: &Diagram, framings: &[i64]) -> Result<()> {
    if framings.len() != d.component_count() {
        return Err(Error::ColorCountMismatch {
            expected: d.component_count(),
            got: framings.len(),
        });
    }
    if let Some(f) = framings.iter().find(|f| f.abs() != 1) {
        return Err(Error::NotAdmissible(format!(
            "framing {} is not +1 or -1",
            f
        )));
    }
    let l = d.linking_data();
    for i in 0..l.len() {
        for j in 0..i {
            if l[i][j] != 0 {
                return Err(Error::NotAdmissible(format!(
                    "components {} and {} have linking number {}",
                    j, i, l[i][j]
                )));
            }
        }
    }
    Ok(())
}

impl SurgeryPresentation {
    pub fn diagram(diagram: Diagram, framings: Vec<i64>) -> Result<Self> {
        check_admissible(&diagram, &framings)?;
        Ok(SurgeryPresentation::Diagram { diagram, framings })
    }

    pub fn borromean(i: i64, j: i64, k: i64) -> Self {
        SurgeryPresentation::Borromean { params: [i, j, k] }
    }

    /// The empty link, a presentation of `S^3`.
    pub fn sphere() -> Self {
        SurgeryPresentation::Diagram {
            diagram: Diagram::empty(),
            framings: Vec::new(),
        }
    }

    /// Diagram with `±1` framings. Borromean parameters must lie in
    /// `{-1, 0, 1}` for this to exist.
    pub fn admissible_form(&self) -> Result<(Diagram, Vec<i64>)> {
        match self {
            SurgeryPresentation::Diagram { diagram, framings } => {
                check_admissible(diagram, framings)?;
                Ok((diagram.clone(), framings.clone()))
            }
            SurgeryPresentation::Borromean { params } => {
                if let Some(p) = params.iter().find(|p| p.abs() > 1) {
                    return Err(Error::NotAdmissible(format!(
                        "surgery coefficient -1/{} is not an integer",
                        p
                    )));
                }
                let keep: Vec<usize> = (0..3).filter(|&c| params[c] != 0).collect();
                let d = builtin("borromean")?.sublink(&keep)?;
                let f = keep.iter().map(|&c| -params[c]).collect();
                Ok((d, f))
            }
        }
    }

    /// `J_M` at the given depth.
    pub fn jm(&self, depth: usize) -> Result<HabiroElem> {
        match self {
            SurgeryPresentation::Diagram { diagram, framings } => {
                jm_from_surgery(diagram, framings, depth)
            }
            SurgeryPresentation::Borromean { params: [i, j, k] } => jm_borromean(*i, *j, *k, depth),
        }
    }

    /// Parses `{"family":"borromean","params":[i,j,k]}`,
    /// `{"diagram": <path or inline text>, "framings": [...]}` or
    /// `{"builtin": <name>, "framings": [...]}`. Relative paths are resolved
    /// against `base`.
    pub fn from_json(v: &serde_json::Value, base: Option<&Path>) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Encoding("presentation must be a JSON object".into()))?;
        if let Some(fam) = obj.get("family") {
            if fam.as_str() != Some("borromean") {
                return Err(Error::UnknownName(format!("family {}", fam)));
            }
            let p = obj
                .get("params")
                .and_then(|p| p.as_array())
                .filter(|p| p.len() == 3)
                .ok_or_else(|| {
                    Error::Encoding("\"params\" must be a list of three integers".into())
                })?;
            let mut params = [0i64; 3];
            for (k, x) in p.iter().enumerate() {
                params[k] = x
                    .as_i64()
                    .ok_or_else(|| Error::Encoding(format!("bad parameter {}", x)))?;
            }
            return Ok(SurgeryPresentation::Borromean { params });
        }
        let framings: Vec<i64> = match obj.get("framings") {
            Some(f) => f
                .as_array()
                .ok_or_else(|| Error::Encoding("\"framings\" must be a list".into()))?
                .iter()
                .map(|x| {
                    x.as_i64()
                        .ok_or_else(|| Error::Encoding(format!("bad framing {}", x)))
                })
                .collect::<Result<_>>()?,
            None => Vec::new(),
        };
        let diagram = if let Some(name) = obj.get("builtin") {
            builtin(
                name.as_str()
                    .ok_or_else(|| Error::Encoding("\"builtin\" must be a string".into()))?,
            )?
        } else if let Some(d) = obj.get("diagram") {
            let s = d
                .as_str()
                .ok_or_else(|| Error::Encoding("\"diagram\" must be a string".into()))?;
            load_diagram(s, base)?
        } else {
            return Err(Error::Encoding(
                "presentation needs \"family\", \"diagram\" or \"builtin\"".into(),
            ));
        };
        Self::diagram(diagram, framings)
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            SurgeryPresentation::Diagram { diagram, framings } => {
                serde_json::json!({ "diagram": diagram.to_text(), "framings": framings })
            }
            SurgeryPresentation::Borromean { params } => {
                serde_json::json!({ "family": "borromean", "params": params })
            }
        }
    }
}

/// Reads a diagram from a file if one exists at `s`, else parses `s` itself.
pub fn load_diagram(s: &str, base: Option<&Path>) -> Result<Diagram> {
    let looks_inline = s.trim().is_empty() || s.contains('\n') || s.contains('(');
    if !looks_inline {
        let p = match base {
            Some(b) if Path::new(s).is_relative() => b.join(s),
            _ => Path::new(s).to_path_buf(),
        };
        let text = std::fs::read_to_string(&p)
            .map_err(|e| Error::InvalidInput(format!("cannot read {}: {}", p.display(), e)))?;
        return parse_diagram(&text);
    }
    parse_diagram(s)
}

fn digits(mut idx: usize, n: usize, m: usize) -> Vec<usize> {
    let mut out = vec![0; m];
    for k in (0..m).rev() {
        out[k] = idx % n;
        idx /= n;
    }
    out
}

/// `J_{L^0}(V_{i_1}, ..., V_{i_m})` for all `i_s < n`, corrected to the
/// zero framing, flattened with the last component varying fastest.
pub fn zero_framed_v_table(d: &Diagram, n: usize) -> Result<Vec<Laurent>> {
    let m = d.component_count();
    let w = d.writhes();
    let total = n.pow(m as u32);
    (0..total)
        .into_par_iter()
        .map(|idx| {
            let cols: Vec<u32> = digits(idx, n, m).into_iter().map(|c| c as u32).collect();
            let j = colored_jones(d, &cols)?;
            let e: i64 = cols
                .iter()
                .zip(&w)
                .map(|(&c, &f)| -f * (c as i64) * (c as i64 + 2))
                .sum();
            Ok(j.shift(e))
        })
        .collect()
}

/// `J_{L^0}(P_{k_1}, ..., P_{k_m})` for all `k_s < n`, same layout as
/// [`zero_framed_v_table`].
pub fn zero_framed_p_table(d: &Diagram, n: usize) -> Result<Vec<Laurent>> {
    let m = d.component_count();
    let mut t = zero_framed_v_table(d, n)?;
    // c[k][i]: coefficient of V_i in P_k
    let mut c = vec![vec![Laurent::zero(); n]; n];
    for (k, row) in c.iter_mut().enumerate() {
        for (i, x) in v_expansion(BasisTag::P, k)?.terms() {
            row[i] = x.to_laurent()?;
        }
    }
    // change basis one axis at a time
    for axis in 0..m {
        let stride = n.pow((m - 1 - axis) as u32);
        let mut out = vec![Laurent::zero(); t.len()];
        for (idx, slot) in out.iter_mut().enumerate() {
            let k = (idx / stride) % n;
            let base = idx - k * stride;
            let mut acc = Laurent::zero();
            for (i, ck) in c[k].iter().enumerate().take(k + 1) {
                if !ck.is_zero() {
                    acc.add_assign_ref(&(ck * &t[base + i * stride]));
                }
            }
            *slot = acc;
        }
        t = out;
    }
    Ok(t)
}

/// `J_M` for surgery on `d` with framings `±1`, truncated at `depth`.
///
/// The term for `(k_1, ..., k_m)` is divided by `(q)_k` with `k = max k_s`
/// and stored in slot `k`; terms with `k >= depth` lie in `((q)_depth)`.
pub fn jm_from_surgery(d: &Diagram, framings: &[i64], depth: usize) -> Result<HabiroElem> {
    check_admissible(d, framings)?;
    let m = d.component_count();
    if m == 0 {
        return Ok(HabiroElem::one(depth));
    }
    let table = zero_framed_p_table(d, depth)?;
    let terms: Vec<(usize, Laurent)> = table
        .par_iter()
        .enumerate()
        .map(|(idx, jp)| {
            let ks = digits(idx, depth, m);
            let den: Laurent = ks.iter().map(|&k| qfact_bal(k as i64)).product();
            let mut t = jp.exact_div(&den)?;
            for (&k, &f) in ks.iter().zip(framings) {
                t = &t * &omega_coeff(-f, k);
            }
            let kmax = *ks.iter().max().unwrap();
            Ok((kmax, t.exact_div(&pochhammer(kmax as i64))?))
        })
        .collect::<Result<_>>()?;
    let mut slots = vec![Laurent::zero(); depth];
    for (k, t) in terms {
        slots[k].add_assign_ref(&t);
    }
    HabiroElem::from_terms(slots, depth)
}

/// `J_{M_{i,j,k}}` from the closed Borromean formula, truncated at `depth`.
pub fn jm_borromean(i: i64, j: i64, k: i64, depth: usize) -> Result<HabiroElem> {
    let one = qint_bal(1);
    let mut slots = Vec::with_capacity(depth);
    for l in 0..depth {
        let li = l as i64;
        let w = &(&omega_coeff(i, l) * &omega_coeff(j, l)) * &omega_coeff(k, l);
        if w.is_zero() {
            slots.push(Laurent::zero());
            continue;
        }
        let mut t = &w * &falling_bal(2 * li + 1, li + 1).exact_div(&one)?;
        if l % 2 == 1 {
            t = -t;
        }
        slots.push(t.exact_div(&pochhammer(li))?);
    }
    HabiroElem::from_terms(slots, depth)
}

/// The series `sum_n q^n (1-q^{n+1})...(1-q^{2n+1})/(1-q)`.
pub fn poincare_series(depth: usize) -> Result<HabiroElem> {
    let mut slots = Vec::with_capacity(depth);
    let one_minus_q = &Laurent::one() - &Laurent::q_pow(1);
    for n in 0..depth as i64 {
        let prod: Laurent = (n + 1..=2 * n + 1)
            .map(|j| &Laurent::one() - &Laurent::q_pow(j))
            .product();
        let t = prod.exact_div(&one_minus_q)?.exact_div(&pochhammer(n))?;
        slots.push(t.shift(4 * n));
    }
    HabiroElem::from_terms(slots, depth)
}

/// `J_{M # M'} = J_M J_{M'}`.
pub fn connected_sum(x: &HabiroElem, y: &HabiroElem) -> HabiroElem {
    x.mul(y)
}

/// `J_{-M}`, the bar of `J_M`.
pub fn mirror(x: &HabiroElem) -> HabiroElem {
    x.mirror()
}
