//! Sparse top-down contraction of a sliced diagram.

use std::collections::HashMap;

use rustc_hash::FxHashMap;
use std::sync::{Mutex, OnceLock};

use crate::basis::BasisCombo;
use crate::error::{Error, Result};
use crate::rep::{braiding_modules, Module, Sign};
use crate::ring::{Laurent, LaurentFrac};

use super::diagram::{CrossSign, Diagram, Event, Orient, Strand};

type State = FxHashMap<Vec<u8>, Laurent>;

type Memo = Mutex<HashMap<(u64, Vec<u32>), Laurent>>;

fn memo() -> &'static Memo {
    static M: OnceLock<Memo> = OnceLock::new();
    M.get_or_init(|| Mutex::new(HashMap::new()))
}

fn module_of(s: &Strand, colors: &[u32]) -> Module {
    let n = colors[s.comp];
    match s.orient {
        Orient::Down => Module::irrep(n),
        Orient::Up => Module::dual_of(n),
    }
}

fn add_into(state: &mut State, key: Vec<u8>, c: Laurent) {
    if c.is_zero() {
        return;
    }
    match state.entry(key) {
        std::collections::hash_map::Entry::Occupied(mut o) => {
            o.get_mut().add_assign_ref(&c);
            if o.get().is_zero() {
                o.remove();
            }
        }
        std::collections::hash_map::Entry::Vacant(v) => {
            v.insert(c);
        }
    }
}

fn apply_event(
    state: State,
    ev: &Event,
    off: usize,
    above: &[Strand],
    below: &[Strand],
    above_pos: usize,
    below_pos: usize,
    colors: &[u32],
) -> State {
    match *ev {
        Event::Id { .. } => state,
        Event::Cap(c) => {
            let n = colors[c];
            let left = below[below_pos].orient;
            let mut out =
                State::with_capacity_and_hasher(state.len() * (n as usize + 1), Default::default());
            for (key, val) in state {
                for i in 0..=n {
                    let mut k2 = Vec::with_capacity(key.len() + 2);
                    k2.extend_from_slice(&key[..off]);
                    k2.push(i as u8);
                    k2.push(i as u8);
                    k2.extend_from_slice(&key[off..]);
                    let c = match left {
                        Orient::Down => val.clone(),
                        Orient::Up => val.shift(2 * (n as i64 - 2 * i as i64)),
                    };
                    add_into(&mut out, k2, c);
                }
            }
            out
        }
        Event::Cup(c) => {
            let n = colors[c] as i64;
            let left = above[above_pos].orient;
            let mut out = State::with_capacity_and_hasher(state.len(), Default::default());
            for (key, val) in state {
                if key[off] != key[off + 1] {
                    continue;
                }
                let i = key[off] as i64;
                let mut k2 = Vec::with_capacity(key.len() - 2);
                k2.extend_from_slice(&key[..off]);
                k2.extend_from_slice(&key[off + 2..]);
                let c = match left {
                    Orient::Up => val,
                    Orient::Down => val.shift(-2 * (n - 2 * i)),
                };
                add_into(&mut out, k2, c);
            }
            out
        }
        Event::Cross { sign, .. } => {
            let l = module_of(&above[above_pos], colors);
            let r = module_of(&above[above_pos + 1], colors);
            let s = match sign {
                CrossSign::Plus => Sign::Plus,
                CrossSign::Minus => Sign::Minus,
            };
            let block = braiding_modules(l, r, s);
            let mut out = State::with_capacity_and_hasher(state.len(), Default::default());
            for (key, val) in state {
                for (a, b, c) in block.image(key[off] as usize, key[off + 1] as usize) {
                    let mut k2 = key.clone();
                    k2[off] = *a;
                    k2[off + 1] = *b;
                    add_into(&mut out, k2, &val * c);
                }
            }
            out
        }
    }
}

fn contract(d: &Diagram, colors: &[u32]) -> Laurent {
    let mut state: State = State::default();
    state.insert(Vec::new(), Laurent::one());
    for k in (0..d.slices().len()).rev() {
        let above = d.interface(k + 1);
        let below = d.interface(k);
        // key = [below strands of processed events] ++ [above strands of the rest]
        let (mut ap, mut bp) = (0, 0);
        for ev in &d.slices()[k] {
            let (nb, na) = ev.arity();
            state = apply_event(state, ev, bp, above, below, ap, bp, colors);
            ap += na;
            bp += nb;
        }
    }
    state.remove(&Vec::new()).unwrap_or_else(Laurent::zero)
}

/// Colored Jones invariant of the framed diagram, in `u = q^{1/4}`, with
/// component `i` colored by `V_{colors[i]}`. The unknot with color `n`
/// evaluates to `[n+1]`.
pub fn colored_jones(d: &Diagram, colors: &[u32]) -> Result<Laurent> {
    if colors.len() != d.component_count() {
        return Err(Error::ColorCountMismatch {
            expected: d.component_count(),
            got: colors.len(),
        });
    }
    if colors.iter().any(|&c| c > 250) {
        return Err(Error::InvalidInput(
            "colors above 250 are not supported".into(),
        ));
    }
    let key = (d.fingerprint(), colors.to_vec());
    if let Some(v) = memo().lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let v = contract(d, colors);
    if d.writhes().iter().all(|w| w % 2 == 0) {
        debug_assert!(v.terms().iter().all(|(e, _)| e % 2 == 0));
    }
    memo().lock().unwrap().insert(key, v.clone());
    Ok(v)
}

/// Multiplies by the twist eigenvalues taking the diagram framing to
/// `target` (one integer per component).
pub fn framing_adjust(
    value: &Laurent,
    d: &Diagram,
    colors: &[u32],
    target: &[i64],
) -> Result<Laurent> {
    if target.len() != d.component_count() {
        return Err(Error::ColorCountMismatch {
            expected: d.component_count(),
            got: target.len(),
        });
    }
    let w = d.writhes();
    let mut e = 0i64;
    for i in 0..w.len() {
        let n = colors[i] as i64;
        e += (target[i] - w[i]) * n * (n + 2);
    }
    Ok(value.shift(e))
}

/// Colored Jones invariant with colors given as basis combinations,
/// extended multilinearly from the `V` basis.
pub fn jones_multilinear(d: &Diagram, colors: &[BasisCombo]) -> Result<LaurentFrac> {
    use rayon::prelude::*;

    if colors.len() != d.component_count() {
        return Err(Error::ColorCountMismatch {
            expected: d.component_count(),
            got: colors.len(),
        });
    }
    // per slot: common denominator and integral numerators
    let mut slots: Vec<(Laurent, Vec<(u32, Laurent)>)> = Vec::with_capacity(colors.len());
    for c in colors {
        let v = c.to_v()?;
        let mut den = Laurent::one();
        for (_, x) in v.terms() {
            let dx = x.denom();
            if den.exact_div(dx).is_err() {
                den = match dx.exact_div(&den) {
                    Ok(_) => dx.clone(),
                    Err(_) => &den * dx,
                };
            }
        }
        let mut nums = Vec::new();
        for (n, x) in v.terms() {
            let k = u32::try_from(n)
                .map_err(|_| Error::InvalidInput(format!("color {} is too large", n)))?;
            nums.push((k, x.scale(&den).to_laurent()?));
        }
        slots.push((den, nums));
    }
    if slots.iter().any(|(_, nums)| nums.is_empty()) {
        return Ok(LaurentFrac::zero());
    }
    let mut tuples: Vec<Vec<usize>> = vec![Vec::new()];
    for (_, nums) in &slots {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                (0..nums.len()).map(move |i| {
                    let mut t2 = t.clone();
                    t2.push(i);
                    t2
                })
            })
            .collect();
    }
    let parts: Vec<Result<Laurent>> = tuples
        .par_iter()
        .map(|t| {
            let cols: Vec<u32> = t.iter().zip(&slots).map(|(&i, s)| s.1[i].0).collect();
            let mut acc = colored_jones(d, &cols)?;
            for (&i, s) in t.iter().zip(&slots) {
                acc = &acc * &s.1[i].1;
            }
            Ok(acc)
        })
        .collect();
    let mut num = Laurent::zero();
    for p in parts {
        num.add_assign_ref(&p?);
    }
    let den: Laurent = slots.iter().map(|(d, _)| d.clone()).product();
    LaurentFrac::new(num, den)
}
