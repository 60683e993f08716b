//! The JSON report schema. Key order is the struct declaration order and is
//! stable; bounded results never masquerade as exact (every measure block
//! carries a `status` field from the library serialization).

use serde::Serialize;

use snarklab_core::colouring::ResistanceCertificate;
use snarklab_core::defect::FactorTriple;
use snarklab_core::factors::TwoFactor;
use snarklab_core::invariants::Girth;
use snarklab_core::verify::ClaimReport;
use snarklab_core::MeasureResult;

#[derive(Serialize)]
pub struct InvariantBlock {
    pub n: usize,
    pub edges: usize,
    pub semi_edges: usize,
    pub girth: Girth,
    pub semi_girth: Girth,
    pub connected: bool,
    pub bridgeless: bool,
    pub cubic: bool,
    /// Result of the exhaustive cyclic-cut search below 4 (connected graphs
    /// only).
    pub cyclic_connectivity_at_least_4: Option<bool>,
}

#[derive(Serialize)]
pub struct ColourabilityBlock {
    pub status: &'static str,
    pub value: Option<bool>,
}

#[derive(Serialize)]
pub struct MeasureBlock {
    pub colourable: ColourabilityBlock,
    pub edge_resistance: Option<MeasureResult<ResistanceCertificate>>,
    pub vertex_resistance: Option<MeasureResult<ResistanceCertificate>>,
    pub oddness: Option<MeasureResult<TwoFactor>>,
    pub defect: Option<MeasureResult<FactorTriple>>,
}

#[derive(Serialize)]
pub struct Report {
    pub input: String,
    pub invariants: InvariantBlock,
    pub measures: MeasureBlock,
    pub claims: Vec<ClaimReport>,
    /// Wall-clock milliseconds; absent unless `--timings` was given, so that
    /// node-budgeted runs stay byte-identical.
    pub timing_ms: Option<u128>,
}

impl Report {
    /// Flat CSV row (with header) mirroring the JSON content.
    pub fn csv(&self) -> String {
        let mut header = vec![
            "input", "n", "edges", "semi_edges", "girth", "semi_girth", "connected",
            "bridgeless", "cubic", "colourable",
        ]
        .into_iter()
        .map(String::from)
        .collect::<Vec<_>>();
        let fmt_girth = |g: &Girth| match g {
            Girth::Finite(k) => k.to_string(),
            Girth::Infinite => "inf".to_string(),
        };
        let mut row = vec![
            self.input.clone(),
            self.invariants.n.to_string(),
            self.invariants.edges.to_string(),
            self.invariants.semi_edges.to_string(),
            fmt_girth(&self.invariants.girth),
            fmt_girth(&self.invariants.semi_girth),
            self.invariants.connected.to_string(),
            self.invariants.bridgeless.to_string(),
            self.invariants.cubic.to_string(),
            self.measures
                .colourable
                .value
                .map(|b| b.to_string())
                .unwrap_or_else(|| "unknown".into()),
        ];
        let mut push_measure = |name: &str, lower: Option<usize>, upper: Option<usize>, exact: bool| {
            header.push(format!("{name}_lower"));
            header.push(format!("{name}_upper"));
            header.push(format!("{name}_status"));
            row.push(lower.map(|v| v.to_string()).unwrap_or_default());
            row.push(upper.map(|v| v.to_string()).unwrap_or_default());
            row.push(if lower.is_none() {
                String::new()
            } else if exact {
                "exact".into()
            } else {
                "bounded".into()
            });
        };
        fn bounds<C>(m: &Option<MeasureResult<C>>) -> (Option<usize>, Option<usize>, bool) {
            match m {
                Some(r) => (Some(r.lower()), Some(r.upper()), r.is_exact()),
                None => (None, None, false),
            }
        }
        let (lo, hi, ex) = bounds(&self.measures.edge_resistance);
        push_measure("edge_resistance", lo, hi, ex);
        let (lo, hi, ex) = bounds(&self.measures.vertex_resistance);
        push_measure("vertex_resistance", lo, hi, ex);
        let (lo, hi, ex) = bounds(&self.measures.oddness);
        push_measure("oddness", lo, hi, ex);
        let (lo, hi, ex) = bounds(&self.measures.defect);
        push_measure("defect", lo, hi, ex);
        format!("{}\n{}\n", header.join(","), row.join(","))
    }
}
