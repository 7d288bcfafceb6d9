//! Certificate construction: every command's result as a canonical JSON
//! value (sorted keys, canonical witness strings, no volatile data) and as
//! human-readable text. JSON output is byte-identical across runs on the
//! same input and tool version.

use num_bigint::BigInt;
use sgx_core::gauss::GaussRational;
use sgx_core::partfrac::PartialFraction;
use sgx_core::ratfunc::RatFunc;
use sgx_core::realize::{
    BlockKind, Citation, Embedding, GeneratorTag, NotRealizableReason, PVEquation,
    RealizabilityVerdict, SolutionDescriptor,
};
use sgx_core::sgroups::Decision;
use sgx_core::shiftrel::{CyclicVerdict, GaVerdict, GmVerdict};
use serde_json::{json, Value};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

pub const CITE_GA_CRITERION: Citation = Citation {
    id: "classify.ga",
    statement: "the additive block is full exactly when the logarithmic part of a is nonempty; \
                otherwise the antiderivative is rational and the group is trivial",
};

pub const CITE_GM_CRITERION: Citation = Citation {
    id: "classify.gm",
    statement: "an integer shift relation for delta(y) = a·y exists exactly when every pole of \
                a is simple with rational residue; any higher-order pole or non-real residue \
                vector survives all relations",
};

pub const CITE_CYCLIC_CRITERION: Citation = Citation {
    id: "classify.cyclic",
    statement: "the cyclic block of order d is full exactly when, for every prime p dividing d, \
                some orbit valuation vector of b is nonzero mod p",
};

pub fn citations_json(citations: &[Citation]) -> Value {
    Value::Array(
        citations
            .iter()
            .map(|c| json!({ "id": c.id, "statement": c.statement }))
            .collect(),
    )
}

fn exponents_json(exponents: &[BigInt]) -> Value {
    Value::Array(exponents.iter().map(|e| Value::String(e.to_string())).collect())
}

pub fn gauss_json(value: &GaussRational) -> Value {
    Value::String(value.to_string())
}

pub fn ratfunc_json(value: &RatFunc) -> Value {
    Value::String(value.to_string())
}

/// Assembles the top-level certificate object.
pub fn certificate(command: &str, input: Value, verdict: Value, witnesses: Value,
    citations: &[Citation]) -> Value {
    json!({
        "command": command,
        "input": input,
        "verdict": verdict,
        "witnesses": witnesses,
        "citations": citations_json(citations),
        "version": TOOL_VERSION,
    })
}

pub fn ga_verdict_parts(v: &GaVerdict) -> (Value, Value, String) {
    match v {
        GaVerdict::Full => (
            json!({ "kind": "full" }),
            json!({}),
            "verdict: Full".to_string(),
        ),
        GaVerdict::Trivial(anti) => (
            json!({ "kind": "trivial" }),
            json!({ "antiderivative": ratfunc_json(anti) }),
            format!("verdict: Trivial\nantiderivative: {anti}"),
        ),
    }
}

pub fn gm_verdict_parts(v: &GmVerdict) -> (Value, Value, String) {
    match v {
        GmVerdict::Full => (
            json!({ "kind": "full" }),
            json!({}),
            "verdict: Full".to_string(),
        ),
        GmVerdict::NotFull { exponents, witness } => {
            let text = format!(
                "verdict: NotFull\nexponents: {}\nwitness: {witness}",
                exponents.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", ")
            );
            (
                json!({ "kind": "not_full" }),
                json!({ "exponents": exponents_json(exponents), "witness": ratfunc_json(witness) }),
                text,
            )
        }
    }
}

pub fn cyclic_verdict_parts(v: &CyclicVerdict) -> (Value, Value, String) {
    match v {
        CyclicVerdict::Full => (
            json!({ "kind": "full" }),
            json!({}),
            "verdict: Full".to_string(),
        ),
        CyclicVerdict::NotFull { prime, witness } => (
            json!({ "kind": "not_full", "prime": prime }),
            json!({ "witness": ratfunc_json(witness) }),
            format!("verdict: NotFull\nprime: {prime}\nwitness: {witness}"),
        ),
    }
}

pub fn partial_fraction_parts(pf: &PartialFraction) -> (Value, String) {
    let atoms: Vec<Value> = pf
        .atoms
        .iter()
        .map(|a| {
            json!({
                "beta": gauss_json(&a.beta),
                "order": a.order,
                "coeff": gauss_json(&a.coeff),
            })
        })
        .collect();
    let value = json!({
        "poly_part": pf.poly_part.to_string(),
        "atoms": atoms,
    });
    let mut text = format!("poly_part: {}", pf.poly_part);
    for a in &pf.atoms {
        text.push_str(&format!("\natom: beta={} order={} coeff={}", a.beta, a.order, a.coeff));
    }
    (value, text)
}

fn descriptor_json(d: &SolutionDescriptor) -> Value {
    match d {
        SolutionDescriptor::ExpAtom(g) => json!({ "kind": "exp_atom", "gamma": gauss_json(g) }),
        SolutionDescriptor::LogAtom(g) => json!({ "kind": "log_atom", "gamma": gauss_json(g) }),
        SolutionDescriptor::RootAtom(g, d) => {
            json!({ "kind": "root_atom", "gamma": gauss_json(g), "order": d })
        }
        SolutionDescriptor::ExpX => json!({ "kind": "exp_x" }),
    }
}

fn descriptor_text(d: &SolutionDescriptor) -> String {
    match d {
        SolutionDescriptor::ExpAtom(g) => format!("exp(1/(x-({g})))"),
        SolutionDescriptor::LogAtom(g) => format!("log(1/(x-({g}))+1)"),
        SolutionDescriptor::RootAtom(g, d) => format!("(1/(x-({g}))+1)^(1/{d})"),
        SolutionDescriptor::ExpX => "exp(x)".to_string(),
    }
}

fn verification_json(block: &PVEquation) -> Value {
    match &block.verification {
        sgx_core::realize::BlockVerification::GmFull => json!({ "kind": "gm_full" }),
        sgx_core::realize::BlockVerification::GaFull => json!({ "kind": "ga_full" }),
        sgx_core::realize::BlockVerification::CyclicFull { order } => {
            json!({ "kind": "cyclic_full", "order": order })
        }
        sgx_core::realize::BlockVerification::ConstantGmRelation { exponents, witness } => {
            json!({
                "kind": "relation",
                "exponents": exponents_json(exponents),
                "witness": ratfunc_json(witness),
            })
        }
    }
}

pub fn block_json(block: &PVEquation) -> Value {
    let matrix: Vec<Value> = block
        .matrix
        .iter()
        .map(|row| Value::Array(row.iter().map(ratfunc_json).collect()))
        .collect();
    json!({
        "n": block.n,
        "matrix": matrix,
        "descriptor": descriptor_json(&block.descriptor),
        "claimed_group": crate::specfile::spec_to_json(&block.claimed_group),
        "verification": verification_json(block),
    })
}

fn kind_label(kind: BlockKind) -> String {
    match kind {
        BlockKind::Gm => "gm".to_string(),
        BlockKind::Ga => "ga".to_string(),
        BlockKind::Cyclic(d) => format!("cyclic{d}"),
        BlockKind::ConstantGm => "constant_gm".to_string(),
    }
}

fn embedding_json(e: &Embedding) -> Value {
    match e {
        Embedding::Scalar => json!({ "kind": "scalar" }),
        Embedding::RootSubgroup { row, col } => {
            json!({ "kind": "root_subgroup", "row": row + 1, "col": col + 1 })
        }
        Embedding::DiagonalEntry(j) => json!({ "kind": "diagonal_entry", "index": j + 1 }),
    }
}

fn embedding_text(e: &Embedding) -> String {
    match e {
        Embedding::Scalar => "scalar".to_string(),
        Embedding::RootSubgroup { row, col } => format!("root({},{})", row + 1, col + 1),
        Embedding::DiagonalEntry(j) => format!("diagonal({})", j + 1),
    }
}

fn reason_label(reason: NotRealizableReason) -> &'static str {
    match reason {
        NotRealizableReason::ProperGaSubgroup => "proper_ga_subgroup",
        NotRealizableReason::ConstantUnipotent => "constant_unipotent",
        NotRealizableReason::NotSigmaReduced => "not_sigma_reduced",
        NotRealizableReason::NotSigmaConnected => "not_sigma_connected",
    }
}

fn decomposition_json(tags: &[GeneratorTag]) -> Value {
    Value::Array(
        tags.iter()
            .map(|t| json!({ "kind": kind_label(t.kind), "embedding": embedding_json(&t.embedding) }))
            .collect(),
    )
}

pub fn realizability_parts(v: &RealizabilityVerdict) -> (Value, Value, Vec<Citation>, String) {
    match v {
        RealizabilityVerdict::Realizable { blocks, decomposition, justification } => {
            let blocks_json: Vec<Value> = blocks.iter().map(block_json).collect();
            let mut text = String::from("verdict: Realizable");
            text.push_str(&format!(
                "\ndecomposition: {}",
                if decomposition.is_empty() {
                    "(trivial)".to_string()
                } else {
                    decomposition
                        .iter()
                        .map(|t| format!("{} at {}", kind_label(t.kind), embedding_text(&t.embedding)))
                        .collect::<Vec<_>>()
                        .join("; ")
                }
            ));
            for (idx, block) in blocks.iter().enumerate() {
                text.push_str(&format!(
                    "\nblock {}: n={}, solution {}, a[0][{}] = {}",
                    idx + 1,
                    block.n,
                    descriptor_text(&block.descriptor),
                    block.n - 1,
                    block.matrix[0][block.n - 1]
                ));
            }
            for c in justification {
                text.push_str(&format!("\ncites: {} ({})", c.id, c.statement));
            }
            (
                json!({ "kind": "realizable", "decomposition": decomposition_json(decomposition) }),
                json!({ "blocks": blocks_json }),
                justification.clone(),
                text,
            )
        }
        RealizabilityVerdict::NotRealizable { reason, citation } => {
            let text = format!(
                "verdict: NotRealizable\nreason: {}\ncites: {} ({})",
                reason_label(*reason),
                citation.id,
                citation.statement
            );
            (
                json!({ "kind": "not_realizable", "reason": reason_label(*reason) }),
                json!({}),
                vec![*citation],
                text,
            )
        }
        RealizabilityVerdict::Unknown => (
            json!({ "kind": "unknown" }),
            json!({}),
            Vec::new(),
            "verdict: Unknown\nno implemented criterion applies".to_string(),
        ),
    }
}

pub fn decision_parts(d: Decision) -> (Value, String) {
    let label = match d {
        Decision::Yes => "yes",
        Decision::No => "no",
        Decision::Unsupported => "unsupported",
    };
    (json!({ "value": label }), format!("verdict: {label}"))
}
