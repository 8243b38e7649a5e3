//! Deterministic rendering of coefficient and Faa di Bruno polynomials as
//! LaTeX, plain text and canonical JSON. The JSON form is bit-exact across
//! runs and platforms and round-trips to the identical canonical value, so
//! golden files can rely on byte comparison.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde_json::{json, Value};

use crate::faadibruno::{FSymbol, FaaMonomial, FaaPolynomial, GSymbol};
use crate::jetalgebra::{
    CoefficientPolynomial, DerivativeSymbol, Dims, Head, JetMonomial, JetVariable, RawTerm,
    SymbolCombination,
};
use crate::{JetError, Result};

/// Output layout for formula rendering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatexStyle {
    /// One bracketed coefficient per monomial, like the printed tables.
    Paper,
    /// Every (integer, symbol, monomial) product spelled out inline.
    Compact,
}

#[derive(Clone, Copy)]
enum Script {
    Latex,
    Ascii,
}


fn power(exp: usize) -> String {
    if exp < 10 {
        format!("^{exp}")
    } else {
        format!("^{{{exp}}}")
    }
}

fn head_name(head: Head, script: Script) -> String {
    let letter = if head.is_y() { "Y" } else { "X" };
    match script {
        Script::Latex => format!("\\mathcal{{{letter}}}"),
        Script::Ascii => letter.to_string(),
    }
}

fn symbol_string(dims: &Dims, sym: &DerivativeSymbol, script: Script) -> String {
    let scalar = dims.n() == 1 && dims.m() == 1;
    let mut out = head_name(sym.head(), script);
    if !scalar {
        out.push_str(&format!("^{{{}}}", sym.head().index()));
    }
    let mut sub = String::new();
    if scalar {
        // collapsed power notation: x^a y^b
        let a = sym.x_order();
        let b = sym.y_order();
        if a == 1 {
            sub.push('x');
        } else if a > 1 {
            sub.push('x');
            sub.push_str(&power(a));
        }
        if b == 1 {
            sub.push('y');
        } else if b > 1 {
            sub.push('y');
            sub.push_str(&power(b));
        }
    } else {
        for &i in sym.x_indices() {
            sub.push_str(&format!("x^{{{i}}}"));
        }
        for &l in sym.y_indices() {
            sub.push_str(&format!("y^{{{l}}}"));
        }
    }
    if sub.len() == 1 {
        out.push('_');
        out.push_str(&sub);
    } else if !sub.is_empty() {
        out.push_str(&format!("_{{{sub}}}"));
    }
    out
}

fn jet_var_string(dims: &Dims, var: &JetVariable, script: Script) -> String {
    let _ = script;
    let scalar = dims.n() == 1 && dims.m() == 1;
    if scalar {
        format!("y_{}", var.order())
    } else if dims.m() == 1 {
        let idx: Vec<String> = var.indep().iter().map(|i| i.to_string()).collect();
        format!("y_{{{}}}", idx.join(","))
    } else {
        let idx: Vec<String> = var.indep().iter().map(|i| i.to_string()).collect();
        format!("y_{{{}}}^{{{}}}", idx.join(","), var.dep())
    }
}

fn monomial_string(dims: &Dims, mono: &JetMonomial, script: Script) -> String {
    let mut parts = Vec::new();
    for (var, mult) in mono.grouped() {
        let v = jet_var_string(dims, var, script);
        if mult == 1 {
            parts.push(v);
        } else {
            parts.push(format!("({v}){}", power(mult)));
        }
    }
    parts.join(" ")
}

/// Renders one symbol combination as a signed sum, without brackets.
fn combination_string(dims: &Dims, comb: &SymbolCombination, script: Script) -> String {
    let mut out = String::new();
    for (idx, (key, c)) in comb.iter().enumerate() {
        let mag = c.abs();
        let negative = c.is_negative();
        if idx == 0 {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        match key {
            None => out.push_str(&mag.to_string()),
            Some(sym) => {
                if !mag.is_one() {
                    out.push_str(&format!("{mag} "));
                }
                out.push_str(&symbol_string(dims, sym, script));
            }
        }
    }
    out
}

fn render_poly(p: &CoefficientPolynomial, style: LatexStyle, script: Script) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let dims = p.dims();
    let mut pieces: Vec<String> = Vec::new();
    for (mono, comb) in p.terms() {
        match style {
            LatexStyle::Paper => {
                let inner = combination_string(&dims, comb, script);
                if mono.is_unit() {
                    pieces.push(inner);
                } else {
                    pieces.push(format!(
                        "[{inner}] {}",
                        monomial_string(&dims, mono, script)
                    ));
                }
            }
            LatexStyle::Compact => {
                for (key, c) in comb.iter() {
                    let mut part = String::new();
                    let mag = c.abs();
                    if c.is_negative() {
                        part.push('-');
                    }
                    match key {
                        None => part.push_str(&mag.to_string()),
                        Some(sym) => {
                            if !mag.is_one() {
                                part.push_str(&format!("{mag} "));
                            }
                            part.push_str(&symbol_string(&dims, sym, script));
                        }
                    }
                    if !mono.is_unit() {
                        part.push(' ');
                        part.push_str(&monomial_string(&dims, mono, script));
                    }
                    pieces.push(part);
                }
            }
        }
    }
    join_sum(pieces)
}

fn join_sum(pieces: Vec<String>) -> String {
    let mut out = String::new();
    for (idx, piece) in pieces.into_iter().enumerate() {
        if idx == 0 {
            out.push_str(&piece);
        } else if let Some(rest) = piece.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&piece);
        }
    }
    out
}

/// LaTeX rendering of a prolongation coefficient.
pub fn latex_poly(p: &CoefficientPolynomial, style: LatexStyle) -> String {
    render_poly(p, style, Script::Latex)
}

/// Plain-text rendering of a prolongation coefficient.
pub fn text_poly(p: &CoefficientPolynomial, style: LatexStyle) -> String {
    render_poly(p, style, Script::Ascii)
}

/// Plain-text rendering of one bracketed coefficient.
pub fn text_combination(dims: &Dims, comb: &SymbolCombination) -> String {
    if comb.is_zero() {
        return "0".to_string();
    }
    combination_string(dims, comb, Script::Ascii)
}

/// Plain-text rendering of a jet monomial.
pub fn text_monomial(dims: &Dims, mono: &JetMonomial) -> String {
    if mono.is_unit() {
        return "1".to_string();
    }
    monomial_string(dims, mono, Script::Ascii)
}

fn f_symbol_string(dims: &Dims, f: &FSymbol) -> String {
    if dims.m() == 1 {
        format!("f_{}", f.order())
    } else {
        let idx: Vec<String> = f.y_indices().iter().map(|l| l.to_string()).collect();
        format!("f_{{{}}}", idx.join(","))
    }
}

fn g_symbol_string(dims: &Dims, g: &GSymbol) -> String {
    let comp = if dims.m() == 1 {
        String::new()
    } else {
        format!("^{{{}}}", g.component())
    };
    if dims.n() == 1 {
        format!("g{comp}_{}", g.order())
    } else {
        let idx: Vec<String> = g.x_indices().iter().map(|i| i.to_string()).collect();
        format!("g{comp}_{{{}}}", idx.join(","))
    }
}

fn faa_mono_string(dims: &Dims, mono: &FaaMonomial) -> String {
    let mut parts = vec![f_symbol_string(dims, mono.f())];
    for (g, mult) in mono.grouped() {
        let s = g_symbol_string(dims, g);
        if mult == 1 {
            parts.push(s);
        } else {
            parts.push(format!("({s}){}", power(mult)));
        }
    }
    parts.join(" ")
}

/// LaTeX rendering of a Faa di Bruno polynomial. Terms are ordered with the
/// highest `f`-derivative first, matching the conventional table layout.
pub fn latex_faa(p: &FaaPolynomial, style: LatexStyle) -> String {
    let _ = style;
    if p.is_zero() {
        return "0".to_string();
    }
    let dims = p.dims();
    let mut terms: Vec<(&FaaMonomial, &BigInt)> = p.terms().collect();
    terms.sort_by(|(a, _), (b, _)| {
        b.f()
            .order()
            .cmp(&a.f().order())
            .then_with(|| a.cmp(b))
    });
    let pieces: Vec<String> = terms
        .into_iter()
        .map(|(mono, c)| {
            let mut part = String::new();
            let mag = c.abs();
            if c.is_negative() {
                part.push('-');
            }
            if !mag.is_one() {
                part.push_str(&format!("{mag} "));
            }
            part.push_str(&faa_mono_string(&dims, mono));
            part
        })
        .collect();
    join_sum(pieces)
}

/// Plain-text rendering of a Faa di Bruno polynomial (identical layout).
pub fn text_faa(p: &FaaPolynomial, style: LatexStyle) -> String {
    latex_faa(p, style)
}

fn bigint_value(c: &BigInt) -> Value {
    Value::String(c.to_string())
}

fn parse_bigint(v: &Value) -> Result<BigInt> {
    let s = v
        .as_str()
        .ok_or_else(|| JetError::Parse("integer must be a string".into()))?;
    s.parse::<BigInt>()
        .map_err(|e| JetError::Parse(format!("bad integer {s}: {e}")))
}

/// Canonical JSON for a coefficient polynomial: an array of terms
/// `{"monomial": [[dep, [k..]] ..], "coeff": [[symbol, int] ..]}` in
/// canonical order, where `symbol` is `null` for the pure integer part or
/// `[kind, index, [x..], [y..]]` and integers are decimal strings.
pub fn poly_to_json(p: &CoefficientPolynomial) -> String {
    let mut terms = Vec::new();
    for (mono, comb) in p.terms() {
        let monomial: Vec<Value> = mono
            .factors()
            .iter()
            .map(|v| json!([v.dep(), v.indep()]))
            .collect();
        let coeff: Vec<Value> = comb
            .iter()
            .map(|(key, c)| {
                let sym = match key {
                    None => Value::Null,
                    Some(s) => {
                        let kind = if s.head().is_y() { "Y" } else { "X" };
                        json!([kind, s.head().index(), s.x_indices(), s.y_indices()])
                    }
                };
                json!([sym, bigint_value(c)])
            })
            .collect();
        terms.push(json!({"monomial": monomial, "coeff": coeff}));
    }
    serde_json::to_string(&Value::Array(terms)).expect("serialization cannot fail")
}

/// Parses the canonical JSON form back into a polynomial over `dims`.
pub fn poly_from_json(dims: Dims, data: &str) -> Result<CoefficientPolynomial> {
    let value: Value =
        serde_json::from_str(data).map_err(|e| JetError::Parse(e.to_string()))?;
    let arr = value
        .as_array()
        .ok_or_else(|| JetError::Parse("expected a term array".into()))?;
    let mut raw = Vec::new();
    for term in arr {
        let monomial = term
            .get("monomial")
            .and_then(Value::as_array)
            .ok_or_else(|| JetError::Parse("term without monomial".into()))?;
        let mut factors = Vec::new();
        for f in monomial {
            let pair = f
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| JetError::Parse("bad jet variable".into()))?;
            let dep = pair[0]
                .as_u64()
                .ok_or_else(|| JetError::Parse("bad dependent index".into()))?
                as u32;
            let indep: Vec<u32> = pair[1]
                .as_array()
                .ok_or_else(|| JetError::Parse("bad lower indices".into()))?
                .iter()
                .map(|v| {
                    v.as_u64()
                        .map(|x| x as u32)
                        .ok_or_else(|| JetError::Parse("bad lower index".into()))
                })
                .collect::<Result<_>>()?;
            factors.push((dep, indep));
        }
        let coeff = term
            .get("coeff")
            .and_then(Value::as_array)
            .ok_or_else(|| JetError::Parse("term without coeff".into()))?;
        for entry in coeff {
            let pair = entry
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| JetError::Parse("bad coefficient entry".into()))?;
            let symbol = match &pair[0] {
                Value::Null => None,
                Value::Array(sym) if sym.len() == 4 => {
                    let kind = sym[0]
                        .as_str()
                        .ok_or_else(|| JetError::Parse("bad symbol kind".into()))?;
                    let index = sym[1]
                        .as_u64()
                        .ok_or_else(|| JetError::Parse("bad symbol index".into()))?
                        as u32;
                    let head = match kind {
                        "Y" => Head::Y(index),
                        "X" => Head::X(index),
                        other => {
                            return Err(JetError::Parse(format!("unknown symbol kind {other}")))
                        }
                    };
                    let read_indices = |v: &Value| -> Result<Vec<u32>> {
                        v.as_array()
                            .ok_or_else(|| JetError::Parse("bad index list".into()))?
                            .iter()
                            .map(|x| {
                                x.as_u64()
                                    .map(|u| u as u32)
                                    .ok_or_else(|| JetError::Parse("bad index".into()))
                            })
                            .collect()
                    };
                    Some((head, read_indices(&sym[2])?, read_indices(&sym[3])?))
                }
                _ => return Err(JetError::Parse("bad symbol encoding".into())),
            };
            raw.push(RawTerm {
                coeff: parse_bigint(&pair[1])?,
                symbol,
                factors: factors.clone(),
            });
        }
    }
    CoefficientPolynomial::canonicalize(dims, raw)
}

/// Canonical JSON for a Faa di Bruno polynomial, mirroring the coefficient
/// scheme: `{"monomial": {"f": [l..], "g": [[comp, [x..]] ..]}, "coeff": int}`.
pub fn faa_to_json(p: &FaaPolynomial) -> String {
    let mut terms = Vec::new();
    for (mono, c) in p.terms() {
        let gs: Vec<Value> = mono
            .g_factors()
            .iter()
            .map(|g| json!([g.component(), g.x_indices()]))
            .collect();
        terms.push(json!({
            "monomial": {"f": mono.f().y_indices(), "g": gs},
            "coeff": bigint_value(c),
        }));
    }
    serde_json::to_string(&Value::Array(terms)).expect("serialization cannot fail")
}

/// Parses the canonical Faa di Bruno JSON form back over `dims`.
pub fn faa_from_json(dims: Dims, data: &str) -> Result<FaaPolynomial> {
    let value: Value =
        serde_json::from_str(data).map_err(|e| JetError::Parse(e.to_string()))?;
    let arr = value
        .as_array()
        .ok_or_else(|| JetError::Parse("expected a term array".into()))?;
    let mut out = FaaPolynomial::zero(dims);
    for term in arr {
        let mono = term
            .get("monomial")
            .ok_or_else(|| JetError::Parse("term without monomial".into()))?;
        let f_indices: Vec<u32> = mono
            .get("f")
            .and_then(Value::as_array)
            .ok_or_else(|| JetError::Parse("monomial without f".into()))?
            .iter()
            .map(|v| {
                v.as_u64()
                    .map(|x| x as u32)
                    .ok_or_else(|| JetError::Parse("bad f index".into()))
            })
            .collect::<Result<_>>()?;
        let gs: Vec<GSymbol> = mono
            .get("g")
            .and_then(Value::as_array)
            .ok_or_else(|| JetError::Parse("monomial without g".into()))?
            .iter()
            .map(|gv| {
                let pair = gv
                    .as_array()
                    .filter(|p| p.len() == 2)
                    .ok_or_else(|| JetError::Parse("bad g factor".into()))?;
                let comp = pair[0]
                    .as_u64()
                    .ok_or_else(|| JetError::Parse("bad g component".into()))?
                    as u32;
                let xs: Vec<u32> = pair[1]
                    .as_array()
                    .ok_or_else(|| JetError::Parse("bad g indices".into()))?
                    .iter()
                    .map(|v| {
                        v.as_u64()
                            .map(|x| x as u32)
                            .ok_or_else(|| JetError::Parse("bad g index".into()))
                    })
                    .collect::<Result<_>>()?;
                GSymbol::new(&dims, comp, xs)
            })
            .collect::<Result<_>>()?;
        let coeff = parse_bigint(
            term.get("coeff")
                .ok_or_else(|| JetError::Parse("term without coeff".into()))?,
        )?;
        let f = FSymbol::new(&dims, f_indices)?;
        out.push(FaaMonomial::new(f, gs)?, &coeff);
    }
    Ok(out)
}
