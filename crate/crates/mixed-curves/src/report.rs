//! Markdown rendering of invariant reports.

use crate::invariants::InvariantReport;

const HEADER: &str = "| family | q | r | j | chi_F | chi_F closed | consistent | genus | degree | radial | chi_V | links | zeta |";
const RULE: &str = "|---|---|---|---|---|---|---|---|---|---|---|---|---|";

fn opt(v: Option<i64>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

/// One markdown table with one row per report, in the given order.
pub fn markdown_table(reports: &[InvariantReport]) -> String {
    let mut out = String::new();
    out.push_str(HEADER);
    out.push('\n');
    out.push_str(RULE);
    out.push('\n');
    for r in reports {
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} |\n",
            r.kind,
            r.q,
            r.r,
            r.j,
            r.chi_fiber,
            opt(r.closed_form_chi),
            if r.routes_consistent { "yes" } else { "NO" },
            opt(r.genus),
            r.embedding_degree,
            r.radial_degree,
            r.chi_curve,
            opt(r.link_count),
            r.zeta,
        ));
    }
    out
}
