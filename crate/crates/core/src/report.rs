//! Structured classification reports.
//!
//! A [`Report`] bundles everything the command-line surface prints for one
//! (index, isogeny, field) triple: the canonical index string, the numeric
//! invariants, the anisotropic-kernel components, dimension bookkeeping, the
//! verdict, and any warnings.  Serialization is schema-stable: field order
//! follows the struct declarations below and never depends on map ordering.

use serde::Serialize;

use crate::classify::{classify, Verdict};
use crate::rootsys::positive_root_count;
use crate::titsindex::{parse_index, FieldContext, IsogenyTag, TitsIndex};
use crate::Result;

/// One connected component of the anisotropic kernel, in report form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KernelComponent {
    /// Simple type letter (`"A"`, `"B"`, ...).
    #[serde(rename = "type")]
    pub base_type: String,
    /// Number of vertices of the component.
    pub rank: usize,
    /// Ambient vertex labels, ascending.
    pub vertices: Vec<usize>,
}

/// Dimension bookkeeping for the group and the centralizer of a maximal
/// split torus.
///
/// `group` is `rank + #roots`; `centralizer` is the dimension of the
/// centralizer of a maximal split torus (ambient rank plus the roots of the
/// anisotropic kernel); `affine_factor` is their difference — the dimension
/// of the affine-space factor split off by the big-cell decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DimensionStats {
    /// Dimension of the group.
    pub group: usize,
    /// Dimension of the centralizer of a maximal split torus.
    pub centralizer: usize,
    /// `group - centralizer`.
    pub affine_factor: usize,
}

/// Full report for one classified index.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    /// Canonical form of the input index.
    pub index: String,
    /// Rank of the ambient diagram.
    pub rank: usize,
    /// Number of distinguished orbits.
    pub k_rank: usize,
    /// Largest component rank of the anisotropic kernel.
    pub m: usize,
    /// Components of the anisotropic kernel.
    pub kernel: Vec<KernelComponent>,
    /// Division-algebra degree (declared or inferred), when known.
    pub degree: Option<usize>,
    /// Recognized classification name of the index, when it has one.
    pub name: Option<String>,
    /// Dimension statistics.
    pub dim: DimensionStats,
    /// Classification verdict (class, fired rules, notes).
    pub verdict: Verdict,
    /// Evaluation caveats, hoisted out of the verdict.
    pub warnings: Vec<String>,
}

/// Build the report for one (index, isogeny, field) triple.
pub fn build_report(
    index: &TitsIndex,
    isogeny: IsogenyTag,
    field: FieldContext,
) -> Result<Report> {
    let mut verdict = classify(index, isogeny, field)?;
    let warnings = std::mem::take(&mut verdict.warnings);

    let components = index.anisotropic_kernel()?;
    let kernel: Vec<KernelComponent> = components
        .iter()
        .map(|c| KernelComponent {
            base_type: c.base_type.letter().to_string(),
            rank: c.rank,
            vertices: c.vertices.clone(),
        })
        .collect();
    let m = components.iter().map(|c| c.rank).max().unwrap_or(0);

    let group = index.rank() + 2 * positive_root_count(index.base_type(), index.rank());
    let kernel_positive: usize = components
        .iter()
        .map(|c| positive_root_count(c.base_type, c.rank))
        .sum();
    let centralizer = index.rank() + 2 * kernel_positive;

    Ok(Report {
        index: index.to_string(),
        rank: index.rank(),
        k_rank: index.k_rank(),
        m,
        kernel,
        degree: index.division_degree(),
        name: index.recognized_name()?,
        dim: DimensionStats {
            group,
            centralizer,
            affine_factor: group - centralizer,
        },
        verdict,
        warnings,
    })
}

impl Report {
    /// Pretty JSON with stable field order.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// Plain-text rendering, one fact per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line(format!("index:    {}", self.index));
        if let Some(name) = &self.name {
            line(format!("name:     {name}"));
        }
        line(format!(
            "rank:     {}    k-rank: {}    m(G): {}",
            self.rank, self.k_rank, self.m
        ));
        if self.kernel.is_empty() {
            line("kernel:   (quasi-split: empty)".to_string());
        } else {
            let parts: Vec<String> = self
                .kernel
                .iter()
                .map(|c| {
                    let labels: Vec<String> =
                        c.vertices.iter().map(|v| v.to_string()).collect();
                    format!("{}{} on {{{}}}", c.base_type, c.rank, labels.join(","))
                })
                .collect();
            line(format!("kernel:   {}", parts.join(" + ")));
        }
        match self.degree {
            Some(d) => line(format!("degree:   {d}")),
            None => line("degree:   undetermined".to_string()),
        }
        line(format!(
            "dim:      group {} = centralizer {} + affine factor {}",
            self.dim.group, self.dim.centralizer, self.dim.affine_factor
        ));
        line(format!("verdict:  {}", self.verdict.class));
        for rule in &self.verdict.rules {
            line(format!("  {}: {}", rule.id, rule.cite));
        }
        for note in &self.verdict.notes {
            line(format!("note:     {note}"));
        }
        for warning in &self.warnings {
            line(format!("warning:  {warning}"));
        }
        out
    }
}

/// One row of a batch run: the input line, and either a report or an error.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BatchEntry {
    /// 1-based line number in the batch input.
    pub line: usize,
    /// The raw input line.
    pub input: String,
    /// Report, when the line classified successfully.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<Report>,
    /// Error message, when it did not.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Process one batch line of the form `INDEX[<TAB>ISOGENY[<TAB>FIELD]]`.
///
/// Missing or empty isogeny/field columns default to `other` / `general`.
/// Errors never abort a batch; they become error records.
pub fn batch_entry(line: usize, raw: &str) -> BatchEntry {
    let build = || -> Result<Report> {
        let mut columns = raw.split('\t');
        let index_text = columns.next().unwrap_or("").trim();
        let isogeny = match columns.next().map(str::trim).filter(|c| !c.is_empty()) {
            Some(text) => text.parse::<IsogenyTag>()?,
            None => IsogenyTag::Other,
        };
        let field = match columns.next().map(str::trim).filter(|c| !c.is_empty()) {
            Some(text) => text.parse::<FieldContext>()?,
            None => FieldContext::General,
        };
        let index = parse_index(index_text)?;
        build_report(&index, isogeny, field)
    };
    match build() {
        Ok(report) => BatchEntry {
            line,
            input: raw.to_string(),
            report: Some(report),
            error: None,
        },
        Err(e) => BatchEntry {
            line,
            input: raw.to_string(),
            report: None,
            error: Some(e.to_string()),
        },
    }
}
