//! Serialization of search results and entropy rows.
//!
//! Weights are always written twice: exactly as `num/den` and as a decimal.

use serde::Serialize;

use crate::entropy::EntropyRow;
use crate::hypergraph::Hypergraph;
use crate::triplet::TripletResult;
use crate::weights::RegionPartition;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutFormat {
    #[default]
    Json,
    Tsv,
}

impl std::str::FromStr for OutFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" | "jsonl" => Ok(OutFormat::Json),
            "tsv" => Ok(OutFormat::Tsv),
            _ => Err(format!("unknown output format `{s}`")),
        }
    }
}

#[derive(Debug, Serialize)]
struct TripletRecord<'a> {
    schema_version: u32,
    variant: &'static str,
    ids: [u32; 3],
    labels: [&'a str; 3],
    partition: RegionPartition,
    weight: String,
    weight_num: u64,
    weight_den: u64,
    weight_float: f64,
}

pub fn triplet_json(t: &TripletResult, h: &Hypergraph) -> String {
    let record = TripletRecord {
        schema_version: SCHEMA_VERSION,
        variant: t.variant.name(),
        ids: t.ids,
        labels: t.labels(h),
        partition: t.partition(),
        weight: t.weight.to_string(),
        weight_num: t.weight.num(),
        weight_den: t.weight.den(),
        weight_float: t.weight.to_f64(),
    };
    serde_json::to_string(&record).expect("plain record serializes")
}

pub const TRIPLET_TSV_HEADER: &str =
    "label_a\tlabel_b\tlabel_c\tn_a\tn_b\tn_c\tn_ab\tn_ac\tn_bc\tn_abc\tweight\tweight_float";

pub fn triplet_tsv(t: &TripletResult, h: &Hypergraph) -> String {
    let [a, b, c] = t.labels(h);
    let p = t.partition().as_array().map(|s| s.to_string()).join("\t");
    format!("{a}\t{b}\t{c}\t{p}\t{}\t{}", t.weight, t.weight.to_f64())
}

/// All results in the requested format, one per line, newline-terminated.
pub fn render_triplets(results: &[TripletResult], h: &Hypergraph, format: OutFormat) -> String {
    let mut out = String::new();
    if format == OutFormat::Tsv {
        out.push_str(TRIPLET_TSV_HEADER);
        out.push('\n');
    }
    for t in results {
        out.push_str(&match format {
            OutFormat::Json => triplet_json(t, h),
            OutFormat::Tsv => triplet_tsv(t, h),
        });
        out.push('\n');
    }
    out
}

fn opt(v: Option<f64>) -> String {
    v.map_or_else(|| "NA".to_owned(), |x| x.to_string())
}

pub const ENTROPY_TSV_HEADER: &str = "label_a\tlabel_b\tlabel_c\tweight\tweight_float\ttarget_bits\ttarget_normalized\tgrouped_bits\tgrouped_normalized";

pub fn render_entropy_tsv(rows: &[EntropyRow], h: &Hypergraph) -> String {
    let mut out = String::from(ENTROPY_TSV_HEADER);
    out.push('\n');
    for r in rows {
        let [a, b, c] = r.ids.map(|e| h.edge_label(e));
        out.push_str(&format!(
            "{a}\t{b}\t{c}\t{}/{}\t{}\t{}\t{}\t{}\t{}\n",
            r.weight_num,
            r.weight_den,
            r.weight,
            opt(r.target_bits),
            opt(r.target_normalized),
            opt(r.grouped_bits),
            opt(r.grouped_normalized),
        ));
    }
    out
}
