use serde_json::{json, Value};

use super::{Payload, Report, NORMALIZATION_NOTE};
use crate::homspace::SpectralLine;
use crate::reps::VirtualCharacter;
use crate::weight::{fmt_q, Matrix, Weight, Q};

pub const KOSTANT_LABEL: &str = "kostant (Thm 4)";
pub const FROBENIUS_LABEL: &str = "frobenius (Peter-Weyl)";

fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::from("  ");
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            s.push_str(cell);
            if i + 1 < cells.len() {
                s.push_str(&" ".repeat(w - cell.chars().count() + 2));
            }
        }
        s.push('\n');
        s
    };
    let mut out = line(header.to_vec());
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

fn field(out: &mut String, key: &str, value: impl std::fmt::Display) {
    out.push_str(&format!("{key:<16}{value}\n"));
}

fn sign(s: i8) -> &'static str {
    if s > 0 {
        "+"
    } else {
        "-"
    }
}

pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    field(&mut out, "query", &report.query);
    field(&mut out, "command", report.command);
    field(&mut out, "scale", fmt_q(&report.scale));
    match &report.payload {
        Payload::Spectrum {
            mu,
            cutoff,
            ground_energy,
            lines,
        } => {
            field(&mut out, "mu", mu);
            field(&mut out, "bound", fmt_q(ground_energy));
            field(&mut out, "cutoff", fmt_q(cutoff));
            out.push('\n');
            let rows: Vec<Vec<String>> = lines
                .iter()
                .enumerate()
                .map(|(i, l)| {
                    vec![
                        (i + 1).to_string(),
                        l.lambda.highest_weight.to_string(),
                        fmt_q(&l.energy),
                        l.degeneracy.to_string(),
                        l.frobenius_multiplicity.to_string(),
                    ]
                })
                .collect();
            out.push_str(&table(
                &["#", "lambda", "energy", "degeneracy", "frobenius"],
                &rows,
            ));
        }
        Payload::Lowest {
            mu,
            ground_energy,
            kostant,
            frobenius,
        } => {
            field(&mut out, "mu", mu);
            field(&mut out, "bound", fmt_q(ground_energy));
            out.push('\n');
            out.push_str(KOSTANT_LABEL);
            out.push('\n');
            match kostant {
                Some(k) => {
                    field(&mut out, "  lambda", &k.lambda.highest_weight);
                    field(&mut out, "  energy", fmt_q(&k.energy));
                    field(&mut out, "  multiplicity", k.multiplicity);
                    field(&mut out, "  w sign", sign(k.w.sign()));
                }
                None => out.push_str("  not attained (mu + rho_eta lies on a wall of g)\n"),
            }
            out.push_str(FROBENIUS_LABEL);
            out.push('\n');
            field(&mut out, "  lambda", &frobenius.lambda.highest_weight);
            field(&mut out, "  energy", fmt_q(&frobenius.energy));
            field(&mut out, "  degeneracy", frobenius.degeneracy);
            field(&mut out, "  frobenius", frobenius.frobenius_multiplicity);
        }
        Payload::Gkrs { dim_bound, reports } => {
            field(&mut out, "dim bound", dim_bound);
            out.push('\n');
            let rows: Vec<Vec<String>> = reports
                .iter()
                .map(|(dim, r)| {
                    let rhs: Vec<String> = r
                        .rhs_terms
                        .iter()
                        .map(|t| format!("{}U{}", sign(t.sign), t.label.highest_weight))
                        .collect();
                    vec![
                        r.lambda.highest_weight.to_string(),
                        dim.to_string(),
                        rhs.join(" "),
                        if r.verified {
                            "yes".into()
                        } else {
                            format!("NO {}", r.discrepancy)
                        },
                    ]
                })
                .collect();
            out.push_str(&table(&["lambda", "dim", "multiplet", "verified"], &rows));
            let ok = reports.iter().filter(|(_, r)| r.verified).count();
            out.push('\n');
            field(&mut out, "verified", format!("{ok}/{}", reports.len()));
        }
        Payload::WeylInfo(info) => {
            field(&mut out, "|W_g|", info.order_g);
            field(&mut out, "|W_eta|", info.order_eta);
            field(&mut out, "|C|", info.transversal.len());
            field(&mut out, "rho_g", &info.rho_g);
            field(&mut out, "rho_eta", &info.rho_eta);
            let roots: Vec<String> = info
                .m_positive_roots
                .iter()
                .map(Weight::to_string)
                .collect();
            field(&mut out, "Phi+_m", roots.join(" "));
            let signs: Vec<&str> = info.transversal.iter().map(|c| sign(c.sign())).collect();
            field(&mut out, "C signs", signs.join(" "));
        }
    }
    if report.provenance {
        out.push('\n');
        field(&mut out, "normalization", NORMALIZATION_NOTE);
        field(&mut out, "version", env!("CARGO_PKG_VERSION"));
    }
    out
}

fn q_json(x: &Q) -> Value {
    json!({ "num": x.numer(), "den": x.denom() })
}

fn weight_json(w: &Weight) -> Value {
    Value::Array(w.coords().iter().map(q_json).collect())
}

fn matrix_json(m: &Matrix) -> Value {
    Value::Array(
        m.rows()
            .iter()
            .map(|r| Value::Array(r.iter().map(q_json).collect()))
            .collect(),
    )
}

fn character_json(chi: &VirtualCharacter) -> Value {
    Value::Array(
        chi.iter()
            .map(|(w, m)| json!({ "weight": weight_json(w), "mult": m }))
            .collect(),
    )
}

fn line_json(l: &SpectralLine) -> Value {
    json!({
        "lambda": weight_json(&l.lambda.highest_weight),
        "energy": q_json(&l.energy),
        "degeneracy": l.degeneracy,
        "frobenius_multiplicity": l.frobenius_multiplicity,
    })
}

pub fn report_json(report: &Report) -> Value {
    let payload = match &report.payload {
        Payload::Spectrum {
            mu,
            cutoff,
            ground_energy,
            lines,
        } => json!({
            "mu": weight_json(mu),
            "cutoff": q_json(cutoff),
            "bound": q_json(ground_energy),
            "lines": lines.iter().map(line_json).collect::<Vec<_>>(),
        }),
        Payload::Lowest {
            mu,
            ground_energy,
            kostant,
            frobenius,
        } => {
            let kostant = match kostant {
                Some(k) => json!({
                    "label": KOSTANT_LABEL,
                    "attained": true,
                    "lambda": weight_json(&k.lambda.highest_weight),
                    "energy": q_json(&k.energy),
                    "multiplicity": k.multiplicity,
                    "w": { "matrix": matrix_json(k.w.matrix()), "sign": k.w.sign() },
                }),
                None => json!({ "label": KOSTANT_LABEL, "attained": false }),
            };
            let mut frobenius = line_json(frobenius);
            frobenius["label"] = json!(FROBENIUS_LABEL);
            json!({
                "mu": weight_json(mu),
                "bound": q_json(ground_energy),
                "kostant": kostant,
                "frobenius": frobenius,
            })
        }
        Payload::Gkrs { dim_bound, reports } => json!({
            "dim_bound": dim_bound,
            "verified": reports.iter().filter(|(_, r)| r.verified).count(),
            "total": reports.len(),
            "reports": reports.iter().map(|(dim, r)| json!({
                "lambda": weight_json(&r.lambda.highest_weight),
                "dim": dim,
                "verified": r.verified,
                "rhs": r.rhs_terms.iter().map(|t| json!({
                    "sign": t.sign,
                    "mu": weight_json(&t.label.highest_weight),
                })).collect::<Vec<_>>(),
                "discrepancy": character_json(&r.discrepancy),
            })).collect::<Vec<_>>(),
        }),
        Payload::WeylInfo(info) => json!({
            "order_g": info.order_g,
            "order_eta": info.order_eta,
            "transversal_size": info.transversal.len(),
            "transversal": info.transversal.iter().map(|c| json!({
                "matrix": matrix_json(c.matrix()),
                "sign": c.sign(),
            })).collect::<Vec<_>>(),
            "rho_g": weight_json(&info.rho_g),
            "rho_eta": weight_json(&info.rho_eta),
            "m_positive_roots": info.m_positive_roots.iter().map(weight_json).collect::<Vec<_>>(),
        }),
    };
    let mut root = json!({
        "command": report.command.as_str(),
        "query": {
            "spec": report.query.to_string(),
            "scale": q_json(&report.scale),
        },
        "result": payload,
        "passed": report.passed(),
    });
    if report.provenance {
        root["provenance"] = json!({
            "normalization": NORMALIZATION_NOTE,
            "version": env!("CARGO_PKG_VERSION"),
        });
    }
    root
}

pub fn render_json(report: &Report) -> String {
    let mut s =
        serde_json::to_string_pretty(&report_json(report)).expect("JSON values always serialize");
    s.push('\n');
    s
}
