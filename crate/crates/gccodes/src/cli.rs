//! Command implementations behind the thin `gccodes` binary.
//!
//! Each command resolves a [`RunConfig`] plus a block specification into a
//! machine-readable JSON value (schema 1). The binary prints the value and
//! maps the verification outcome onto its exit code: 0 when every requested
//! check passes, 1 when a check fails, 2 on errors.

use std::fs;
use std::path::Path;
use std::sync::Arc;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::code::{dual_extended_check, CyclicCode};
use crate::cyclotomic::{enumerate_blocks, quadratic_residues, Block, BlockFilters, OrbitTable};
use crate::dna::{
    build_even_subcode_codebook, build_rc_pair_split_codebook, headline_bound, lower_bound,
    verify_codebook, Construction, VerifyOptions,
};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::weights::WeightEnumerator;

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_GUARD: u64 = 1 << 28;

/// Shared command parameters.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub n: usize,
    pub q: u64,
    pub r: usize,
    pub guard: u64,
    pub seed: u64,
    pub threads: Option<usize>,
}

impl RunConfig {
    pub fn new(n: usize) -> RunConfig {
        RunConfig {
            n,
            q: 2,
            r: 2,
            guard: DEFAULT_GUARD,
            seed: 0,
            threads: None,
        }
    }
}

/// Guard resolution: explicit flag, then GCCODES_GUARD, then the default.
pub fn resolve_guard(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var("GCCODES_GUARD")
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(DEFAULT_GUARD)
}

/// Applies the worker-count hint to the global pool. Results never depend
/// on the outcome, so failure (pool already built) is ignored.
pub fn apply_thread_hint(threads: Option<usize>) {
    if let Some(t) = threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global();
    }
}

/// Block argument: an explicit exponent list or the quadratic residues.
#[derive(Debug, Clone)]
pub enum BlockSpec {
    Explicit(Vec<usize>),
    QuadraticResidues,
}

impl BlockSpec {
    pub fn parse(s: &str) -> Result<BlockSpec> {
        if s.eq_ignore_ascii_case("qr") {
            return Ok(BlockSpec::QuadraticResidues);
        }
        let elements = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Unsupported(format!("bad block element '{t}'")))
            })
            .collect::<Result<Vec<usize>>>()?;
        Ok(BlockSpec::Explicit(elements))
    }

    pub fn resolve(&self, table: &Arc<OrbitTable>) -> Result<Block> {
        match self {
            BlockSpec::Explicit(v) => Block::new(Arc::clone(table), v.iter().copied()),
            BlockSpec::QuadraticResidues => {
                Block::new(Arc::clone(table), quadratic_residues(table.n()))
            }
        }
    }
}

/// Names GF(4) symbols as `0,1,w,w2`; other fields fall back to element
/// indexes.
fn poly_symbols(code: &CyclicCode, p: &Polynomial) -> Vec<String> {
    let sf = code.splitting_field();
    p.coeffs()
        .iter()
        .map(|c| match sf.gf4_label(c) {
            Ok(l) => ["0", "1", "w", "w2"][l as usize].to_string(),
            Err(_) => format!("#{}", c.index()),
        })
        .collect()
}

/// `blocks`: list the valid blocks with their flags.
pub fn cmd_blocks(cfg: &RunConfig, filters: &BlockFilters) -> Result<Value> {
    apply_thread_hint(cfg.threads);
    let table = OrbitTable::new(cfg.n, cfg.q, cfg.r)?;
    let exists = table.galois_supplemented_exists();
    let blocks = if exists {
        enumerate_blocks(&table, filters)?
    } else {
        Vec::new()
    };
    let entries: Vec<Value> = blocks
        .iter()
        .map(|b| {
            json!({
                "elements": b.elements(),
                "size": b.len(),
                "complete": b.is_complete(),
                "reversible": b.is_reversible(),
                "selfdual": b.is_selfdual().ok(),
            })
        })
        .collect();
    let mut out = json!({
        "schema": SCHEMA_VERSION,
        "n": cfg.n,
        "q": cfg.q,
        "r": cfg.r,
        "exists": exists,
        "ord_q_mod_n": table.s(),
        "blocks": entries,
    });
    if !exists {
        out["diagnostic"] = json!(format!(
            "no blocks: such codes exist iff r | ord(q mod n), but ord({} mod {}) = {} is not divisible by r = {}",
            cfg.q, cfg.n, table.s(), cfg.r
        ));
    }
    Ok(out)
}

/// `code`: construct the code of one block and report its parameters.
pub fn cmd_code(cfg: &RunConfig, spec: &BlockSpec) -> Result<Value> {
    apply_thread_hint(cfg.threads);
    let table = OrbitTable::new(cfg.n, cfg.q, cfg.r)?;
    let block = spec.resolve(&table)?;
    let code = CyclicCode::from_block(&block)?;
    let idempotent = code.idempotent()?;
    let min_distance = if code.word_count() <= cfg.guard as u128 {
        Some(code.min_distance(cfg.guard)?)
    } else {
        None
    };
    let extended_self_dual = if block.is_complete() {
        Some(dual_extended_check(&block, cfg.guard)?)
    } else {
        None
    };
    Ok(json!({
        "schema": SCHEMA_VERSION,
        "n": cfg.n,
        "q": cfg.q,
        "r": cfg.r,
        "block": block.elements(),
        "generator": poly_symbols(&code, code.generator()),
        "dimension": code.dimension(),
        "idempotent": poly_symbols(&code, &idempotent),
        "min_distance": min_distance,
        "reversible": block.is_reversible(),
        "complete": block.is_complete(),
        "extended_self_dual": extended_self_dual,
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumeratorMode {
    Closed,
    Brute,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubcodeVariant {
    Code,
    Even,
    Extended,
}

/// `enumerator`: weight distribution table; in `both` mode every
/// per-coefficient diff must be zero.
pub fn cmd_enumerator(
    cfg: &RunConfig,
    spec: &BlockSpec,
    mode: EnumeratorMode,
    variant: SubcodeVariant,
) -> Result<(Value, bool)> {
    apply_thread_hint(cfg.threads);
    let table = OrbitTable::new(cfg.n, cfg.q, cfg.r)?;
    let block = spec.resolve(&table)?;
    let code = CyclicCode::from_block(&block)?;
    let closed = match (mode, variant) {
        (EnumeratorMode::Brute, _) => None,
        (_, SubcodeVariant::Code) => Some(code.fq_weights_closed()?),
        (_, SubcodeVariant::Even) => Some(code.fq_weights_even_subcode()?),
        (_, SubcodeVariant::Extended) => Some(code.fq_weights_extended()?),
    };
    let brute = match (mode, variant) {
        (EnumeratorMode::Closed, _) => None,
        (_, SubcodeVariant::Code) => Some(code.fq_weights_brute(cfg.guard)?),
        (_, SubcodeVariant::Even) => Some(code.even_subcode()?.fq_weights_brute(cfg.guard)?),
        (_, SubcodeVariant::Extended) => Some(code.fq_weights_extended_brute(cfg.guard)?),
    };
    let length = closed
        .as_ref()
        .or(brute.as_ref())
        .map(WeightEnumerator::n)
        .unwrap();
    let mut all_zero = true;
    let rows: Vec<Value> = (0..=length)
        .map(|w| {
            let mut row = json!({"w": w});
            if let Some(c) = &closed {
                row["closed"] = json!(c.count(w).to_string());
            }
            if let Some(b) = &brute {
                row["brute"] = json!(b.count(w).to_string());
            }
            if let (Some(c), Some(b)) = (&closed, &brute) {
                let diff = if c.count(w) >= b.count(w) {
                    c.count(w) - b.count(w)
                } else {
                    b.count(w) - c.count(w)
                };
                if !diff.is_zero() {
                    all_zero = false;
                }
                row["diff"] = json!(diff.to_string());
            }
            row
        })
        .collect();
    let value = json!({
        "schema": SCHEMA_VERSION,
        "n": cfg.n,
        "q": cfg.q,
        "r": cfg.r,
        "block": block.elements(),
        "mode": match mode {
            EnumeratorMode::Closed => "closed",
            EnumeratorMode::Brute => "brute",
            EnumeratorMode::Both => "both",
        },
        "variant": match variant {
            SubcodeVariant::Code => "code",
            SubcodeVariant::Even => "even",
            SubcodeVariant::Extended => "extended",
        },
        "counts": rows,
        "pass": all_zero,
    });
    Ok((value, all_zero))
}

/// Renders an enumerator table as `w,count` CSV rows.
pub fn enumerator_csv(value: &Value) -> String {
    let mut out = String::from("w,count\n");
    if let Some(rows) = value["counts"].as_array() {
        for row in rows {
            let count = row
                .get("closed")
                .or_else(|| row.get("brute"))
                .and_then(Value::as_str)
                .unwrap_or("0");
            out.push_str(&format!("{},{}\n", row["w"], count));
        }
    }
    out
}

/// `dna`: build and verify a codebook, optionally writing FASTA + metadata.
pub fn cmd_dna(
    cfg: &RunConfig,
    spec: &BlockSpec,
    construction: Construction,
    claimed_d: Option<usize>,
    bound_only: bool,
    out_prefix: Option<&Path>,
) -> Result<(Value, bool)> {
    apply_thread_hint(cfg.threads);
    let table = OrbitTable::new(cfg.n, cfg.q, cfg.r)?;
    let block = spec.resolve(&table)?;
    let bound = lower_bound(cfg.n, &block, claimed_d.unwrap_or(0))?;
    if bound_only {
        return Ok((
            json!({
                "schema": SCHEMA_VERSION,
                "n": cfg.n,
                "block": block.elements(),
                "bound": bound.to_string(),
                "complete_code_bound": headline_bound(cfg.n).to_string(),
                "bound_only": true,
            }),
            true,
        ));
    }
    let code = CyclicCode::from_block(&block)?;
    let d = match claimed_d {
        Some(d) => d,
        None => code.min_distance(cfg.guard)?,
    };
    let book = match construction {
        Construction::EvenSubcode => build_even_subcode_codebook(&code, d, cfg.guard)?,
        Construction::RcPairSplit => build_rc_pair_split_codebook(&code, d, cfg.guard)?,
    };
    let report = verify_codebook(
        &book,
        &VerifyOptions {
            seed: cfg.seed,
            ..Default::default()
        },
    );
    let mut files = json!(null);
    if let Some(prefix) = out_prefix {
        let fasta_path = prefix.with_extension("fasta");
        let json_path = prefix.with_extension("json");
        let mut fasta = Vec::new();
        book.write_fasta(&mut fasta)?;
        fs::write(&fasta_path, fasta)?;
        let mut meta = book.metadata_json();
        meta["schema"] = json!(SCHEMA_VERSION);
        meta["bound"] = json!(bound.to_string());
        meta["verification"] = report.to_json();
        fs::write(
            &json_path,
            format!("{}\n", serde_json::to_string_pretty(&meta)?),
        )?;
        files = json!({
            "fasta": fasta_path.display().to_string(),
            "metadata": json_path.display().to_string(),
        });
    }
    let value = json!({
        "schema": SCHEMA_VERSION,
        "n": cfg.n,
        "q": cfg.q,
        "r": cfg.r,
        "block": block.elements(),
        "construction": book.construction().tag(),
        "d": d,
        "w": book.gc_weight(),
        "count": book.len(),
        "bound": bound.to_string(),
        "complete_code_bound": headline_bound(cfg.n).to_string(),
        "verification": report.to_json(),
        "files": files,
        "pass": report.pass,
    });
    Ok((value, report.pass))
}

/// Failure value for the nonzero exit path.
pub fn error_json(err: &Error) -> Value {
    json!({
        "schema": SCHEMA_VERSION,
        "status": "error",
        "message": err.to_string(),
    })
}
