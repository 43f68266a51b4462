//! Command results, rendered either as canonical JSON or as readable text.

use std::sync::Arc;

use serde_json::{json, Map, Value};
use skewcyclic::linalg::PolyMatrix;
use skewcyclic::ring::RingElement;
use skewcyclic::skew::SkewPoly;
use skewcyclic::{Gf, Poly};

use crate::text::{print_fz, print_poly, print_ring_element, print_x_poly};

#[derive(Clone, Debug)]
pub enum Val {
    Null,
    Bool(bool),
    Int(u64),
    Str(String),
    Skew(SkewPoly),
    Ring(RingElement, Arc<Gf>),
    /// A polynomial over F in x, such as π_(g).
    FieldPoly(Poly, Arc<Gf>),
    Matrix(PolyMatrix),
    List(Vec<Val>),
    Obj(Vec<(String, Val)>),
}

impl Val {
    pub fn obj(fields: Vec<(&str, Val)>) -> Val {
        Val::Obj(fields.into_iter().map(|(k, v)| (k.to_string(), v)).collect())
    }

    pub fn opt(v: Option<Val>) -> Val {
        v.unwrap_or(Val::Null)
    }

    pub fn to_json(&self) -> Value {
        let encs = |p: &Poly| p.coeffs().iter().map(|c| c.enc()).collect::<Vec<_>>();
        match self {
            Val::Null => Value::Null,
            Val::Bool(b) => json!(b),
            Val::Int(i) => json!(i),
            Val::Str(s) => json!(s),
            Val::Skew(g) => {
                json!(g.coeffs().iter().map(|a| a.coeffs().iter().map(|c| c.enc()).collect::<Vec<_>>()).collect::<Vec<_>>())
            }
            Val::Ring(a, _) => json!(a.coeffs().iter().map(|c| c.enc()).collect::<Vec<_>>()),
            Val::FieldPoly(p, _) => json!(encs(p)),
            Val::Matrix(m) => json!((0..m.rows()).map(|i| m.row(i).iter().map(encs).collect::<Vec<_>>()).collect::<Vec<_>>()),
            Val::List(v) => Value::Array(v.iter().map(Val::to_json).collect()),
            Val::Obj(fields) => Value::Object(fields.iter().map(|(k, v)| (k.clone(), v.to_json())).collect::<Map<_, _>>()),
        }
    }

    fn inline(&self) -> Option<String> {
        Some(match self {
            Val::Null => "none".into(),
            Val::Bool(b) => b.to_string(),
            Val::Int(i) => i.to_string(),
            Val::Str(s) => s.clone(),
            Val::Skew(g) => print_poly(g),
            Val::Ring(a, f) => print_ring_element(a, f),
            Val::FieldPoly(p, f) => print_x_poly(p, f),
            Val::List(v) if v.iter().all(|x| matches!(x, Val::Int(_))) => {
                let items: Vec<String> = v.iter().filter_map(Val::inline).collect();
                format!("[{}]", items.join(", "))
            }
            _ => return None,
        })
    }

    fn write_text(&self, out: &mut String, indent: usize) {
        let pad = " ".repeat(indent);
        match self {
            Val::Matrix(m) => {
                let f = m.field();
                for i in 0..m.rows() {
                    let row: Vec<String> = m.row(i).iter().map(|p| print_fz(p, f)).collect();
                    out.push_str(&format!("{pad}[{}]\n", row.join(", ")));
                }
                if m.rows() == 0 {
                    out.push_str(&format!("{pad}(no rows)\n"));
                }
            }
            Val::List(items) => {
                for item in items {
                    match item.inline() {
                        Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                        None => {
                            out.push_str(&format!("{pad}-\n"));
                            item.write_text(out, indent + 2);
                        }
                    }
                }
            }
            Val::Obj(fields) => {
                for (k, v) in fields {
                    match v.inline() {
                        Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                        None => {
                            out.push_str(&format!("{pad}{k}:\n"));
                            v.write_text(out, indent + 2);
                        }
                    }
                }
            }
            v => out.push_str(&format!("{pad}{}\n", v.inline().unwrap_or_default())),
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        self.write_text(&mut s, 0);
        s
    }
}
