//! LaTeX rendering: each identity in display form followed by its computed
//! values.

use std::fmt::Write as _;

use crate::document::Document;

/// Display form of a known identity; `None` for ids without a template.
fn template(id: &str) -> Option<&'static str> {
    let base = id.rsplit('.').next().unwrap_or(id);
    Some(match base {
        "eq2" => r"\alpha^{1/3}+\beta^{1/3}+\gamma^{1/3}=\left(a+6+3t\right)^{1/3}",
        "eq3" => {
            r"(\alpha\beta)^{1/3}+(\beta\gamma)^{1/3}+(\gamma\alpha)^{1/3}=\left(b+6+3t\right)^{1/3}"
        }
        "eq3_literal" => r"(\alpha\beta)^{1/3}+(\beta\gamma)^{1/3}+(\gamma\alpha)^{1/3}=b+6+3t",
        "eq11" => r"x_1^{1/3}+x_2^{1/3}+x_3^{1/3}=\left(-p-6r^{1/3}+3(9r-pq)^{1/3}\right)^{1/3}",
        "eq12" => {
            r"(x_1x_2)^{1/3}+(x_2x_3)^{1/3}+(x_3x_1)^{1/3}=\left(q+6r^{2/3}-3(9r^2-pqr)^{1/3}\right)^{1/3}"
        }
        "eq13" => {
            r"x_1^{-1/3}+x_2^{-1/3}+x_3^{-1/3}=r^{-1/3}\left(-q-6r^{2/3}+3(9r^2-pqr)^{1/3}\right)^{1/3}"
        }
        "eq26" => {
            r"\sum_{i\ne j}\left(\frac{x_i}{x_j}\right)^{1/3}=\left(\frac{pq}{r}-9\right)^{1/3}"
        }
        "eq27" => {
            r"\Bigl(\sum_{i\ne j}\left(\frac{x_i}{x_j}\right)^{1/3}\Bigr)^3=\sum_{i\ne j}\frac{x_i}{x_j}-6"
        }
        "ex1_sum" => r"1-2^{1/3}+4^{1/3}=\left(-9+9\cdot 2^{1/3}\right)^{1/3}",
        "eq14" => {
            r"\left(\tfrac19\right)^{1/3}-\left(\tfrac29\right)^{1/3}+\left(\tfrac49\right)^{1/3}=\left(2^{1/3}-1\right)^{1/3}"
        }
        "eq15" => {
            r"\sum_{k\in\{2,4,8\}}\left(\cos\tfrac{k\pi}{7}\right)^{1/3}=\left(\tfrac{5-3\cdot7^{1/3}}{2}\right)^{1/3}"
        }
        "eq16" => {
            r"\sum_{k\in\{2,4,8\}}\left(\cos\tfrac{k\pi}{9}\right)^{1/3}=\left(\tfrac{3\cdot9^{1/3}-6}{2}\right)^{1/3}"
        }
        "eq19" => {
            r"\sum_{k\in\{2,4,8\}}\left(\sec\tfrac{k\pi}{7}\right)^{1/3}=\left(8-6\cdot7^{1/3}\right)^{1/3}"
        }
        "eq20" => {
            r"\sum_{k\in\{2,4,8\}}\left(\sec\tfrac{k\pi}{9}\right)^{1/3}=\left(6(9^{1/3}-1)\right)^{1/3}"
        }
        "eq31" => {
            r"\sum_{i\ne j}\left(\frac{\cos\theta_i}{\cos\theta_j}\right)^{1/3}=-7^{1/3},\ \theta\in\{\tfrac{2\pi}7,\tfrac{4\pi}7,\tfrac{8\pi}7\}"
        }
        "eq32" => {
            r"\sum_{i\ne j}\left(\frac{\cos\theta_i}{\cos\theta_j}\right)^{1/3}=-9^{1/3},\ \theta\in\{\tfrac{2\pi}9,\tfrac{4\pi}9,\tfrac{8\pi}9\}"
        }
        "eq22" => {
            r"\sum_{k}\sin^2\theta_k\left(2\cos2\theta_k\right)^{1/3}=-\tfrac14\left(63(1+7^{1/3})\right)^{1/3}"
        }
        "eq23_literal" => {
            r"\sum_{k}\csc^2\theta_k\left(2\sec2\theta_k\right)^{1/3}=7\left(441(2-7^{1/3})\right)^{1/3}"
        }
        "eq23_corrected" => {
            r"\sum_{k}\csc^2\theta_k\left(2\sec2\theta_k\right)^{1/3}=\tfrac17\left(2^8\cdot441(2-7^{1/3})\right)^{1/3}"
        }
        "eq33_literal" | "eq33_corrected" => {
            r"\sum_{i\ne j}\left(\frac{\sin\theta_i}{\sin\theta_j}\right)^2\left(\frac{\cos2\theta_i}{\cos2\theta_j}\right)^{1/3}=-3\cdot7^{1/3}"
        }
        "eq21_roots_literal" => r"\prod_k 2\sin^6\theta_k\cos2\theta_k=343",
        "eq21_roots_corrected" => r"\prod_k 2^7\sin^6\theta_k\cos2\theta_k=343",
        "eq41a" => {
            r"\frac{\cos\frac{2\pi}7}{\cos\frac{4\pi}7}\left(\frac{\sin\frac{8\pi}7}{\sin\frac{4\pi}7}\right)^3=\frac{\cos\frac{4\pi}7}{\cos\frac{8\pi}7}"
        }
        "eq41b" => {
            r"\frac{\cos\frac{2\pi}7}{\cos\frac{8\pi}7}\left(\frac{\sin\frac{2\pi}7}{\sin\frac{4\pi}7}\right)^3=\frac{\cos\frac{4\pi}7}{\cos\frac{2\pi}7}"
        }
        "eq41c" => {
            r"\frac{\cos\frac{4\pi}7}{\cos\frac{8\pi}7}\left(\frac{\sin\frac{2\pi}7}{\sin\frac{8\pi}7}\right)^3=\frac{\cos\frac{8\pi}7}{\cos\frac{2\pi}7}"
        }
        "ex5_1_literal" => r"\frac1{x_1}=1+x_3",
        "ex5_2_literal" => r"\frac1{x_2}=1+x_1",
        "ex5_3_literal" => r"\frac1{x_3}=1+x_2",
        "ex5_1_corrected" => r"\frac1{x_1}=-(1+x_3)",
        "ex5_2_corrected" => r"\frac1{x_2}=-(1+x_1)",
        "ex5_3_corrected" => r"\frac1{x_3}=-(1+x_2)",
        "ex6_1" => r"\frac1{x_1}=1-x_2",
        "ex6_2" => r"\frac1{x_2}=1-x_3",
        "ex6_3" => r"\frac1{x_3}=1-x_1",
        _ => return None,
    })
}

fn escape(s: &str) -> String {
    s.replace('_', r"\_")
}

/// Converts a decimal such as `1.5e-30` to `1.5\times10^{-30}`.
fn number(s: &str) -> String {
    match s.split_once('e') {
        Some((m, e)) => format!(r"{m}\times10^{{{e}}}"),
        None => s.to_string(),
    }
}

pub fn render(doc: &Document) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "% {} at {} bits", doc.command, doc.precision_bits);
    if let Some(c) = doc.cubic_text() {
        let _ = writeln!(out, r"\[ {} \]", c.replace('*', ""));
    }
    for r in &doc.reports {
        let label = escape(&r.identity_id);
        match template(&r.identity_id) {
            Some(t) => {
                let _ = writeln!(out, r"\begin{{equation*}}\tag{{{label}}}");
                let _ = writeln!(out, "{t}");
                let _ = writeln!(out, r"\end{{equation*}}");
            }
            None => {
                let _ = writeln!(out, r"\paragraph{{{label}}}");
            }
        }
        let _ = writeln!(
            out,
            r"\[ \mathrm{{lhs}}={},\quad \mathrm{{rhs}}={},\quad |\Delta|={}\le{}\ \text{{{}}} \]",
            number(&r.lhs.to_string()),
            number(&r.rhs.to_string()),
            number(&r.residual.to_decimal(12)),
            number(&r.tolerance.to_decimal(6)),
            if r.pass { "(pass)" } else { "(fail)" },
        );
    }
    if let Some(e) = &doc.error {
        let _ = writeln!(out, r"% failed: {e}");
    }
    out
}
