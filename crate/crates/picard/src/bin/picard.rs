use std::io::{Read, Write};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use picard::catalog;
use picard::constructions::{self, ModHom};
use picard::equivalence::{find_equivalence_stats, invariants_fingerprint, Fingerprint};
use picard::io::{parse, report_json_lines, serialize, Carrier, Document, ReportDoc};
use picard::representation::end_ring;
use picard::rmodule::{biproduct, hom_two_group, zero_hom, Module};
use picard::search::SearchBudget;
use picard::{CheckReport, Error, Result};

#[derive(Parser)]
#[command(name = "picard", version, about = "Check and build finite 2-groups, 2-rings and 2-modules")]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Candidate budget for exhaustive searches (default: $PICARD_BUDGET or 20000000).
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Leave timing out of reports so identical runs give identical bytes.
    #[arg(long, global = true)]
    deterministic: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    JsonLines,
}

#[derive(Subcommand)]
enum Command {
    /// Run the validator matching the document kind.
    Validate { input: String },
    /// Build a structure and print it; its validation report goes to stderr.
    Construct {
        #[arg(value_enum)]
        what: What,
        inputs: Vec<String>,
    },
    /// Search for an equivalence between two modules.
    Equiv { a: String, b: String },
    /// Run the four image comparisons for a module hom.
    Puppe { input: String },
    /// Print a catalog instance, or `list` for all names.
    Catalog { name: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Kernel,
    Cokernel,
    Pip,
    Copip,
    Root,
    Coroot,
    Im1,
    Im2,
    Im1pl,
    Im2pl,
    Biproduct,
    End,
    Hom,
}

/// Inputs are file paths, `-` for stdin, or `catalog:<name>`.
fn load(input: &str) -> Result<Document> {
    if let Some(name) = input.strip_prefix("catalog:") {
        return catalog_doc(name).ok_or_else(|| Error::Reference(format!("no catalog instance {name}")));
    }
    let mut text = String::new();
    let res = if input == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(input).map(|t| text = t)
    };
    res.map_err(|e| Error::Reference(format!("{input}: {e}")))?;
    parse(&text)
}

fn catalog_names() -> Vec<String> {
    let mut v: Vec<String> = catalog::two_groups().into_iter().map(|x| x.0).collect();
    v.extend(catalog::rings().into_iter().map(|x| x.0));
    v.extend(catalog::modules().into_iter().map(|x| x.0));
    v.extend(catalog::homs().into_iter().map(|h| h.name));
    v
}

fn catalog_doc(name: &str) -> Option<Document> {
    if let Some((_, g)) = catalog::two_groups().into_iter().find(|x| x.0 == name) {
        return Some(Document::TwoGroup(g));
    }
    if let Some((_, r)) = catalog::rings().into_iter().find(|x| x.0 == name) {
        return Some(Document::TwoRing((*r).clone()));
    }
    if let Some(m) = catalog::module(name) {
        return Some(Document::Module((*m).clone()));
    }
    catalog::hom(name).map(|h| Document::Hom { dom: Carrier::Module(h.dom), cod: Carrier::Module(h.cod), hom: h.hom })
}

fn module_of(doc: Document, what: &str) -> Result<Arc<Module>> {
    match doc {
        Document::Module(m) => Ok(Arc::new(m)),
        d => Err(Error::Reference(format!("{what} must be a module, got {}", d.kind()))),
    }
}

fn mod_hom(doc: Document) -> Result<ModHom> {
    match doc {
        Document::Hom { dom: Carrier::Module(d), cod: Carrier::Module(c), hom } => Ok(ModHom::new(d, c, hom)),
        d => Err(Error::Reference(format!("expected a module hom, got {}", d.kind()))),
    }
}

/// `(A, B, α)` for a 2-morphism between zero homs of modules.
fn zero_two_morphism(doc: Document) -> Result<(Arc<Module>, Arc<Module>, picard::twogroup::TwoMor)> {
    match doc {
        Document::TwoMorphism { dom: Carrier::Module(d), cod: Carrier::Module(c), source, target, mor } => {
            let z = zero_hom(&d, &c)?;
            if source != z || target != z {
                return Err(Error::Boundary("α must go between zero homs".into()));
            }
            Ok((d, c, mor))
        }
        d => Err(Error::Reference(format!("expected a module 2-morphism, got {}", d.kind()))),
    }
}

struct Ctx {
    budget: SearchBudget,
    deterministic: bool,
    format: Format,
}

impl Ctx {
    fn render(&self, r: &ReportDoc) -> String {
        match self.format {
            Format::Text => serialize(&Document::Report(r.clone())),
            Format::JsonLines => report_json_lines(r),
        }
    }

    fn finish(&self, r: ReportDoc, started: Instant) -> ReportDoc {
        if self.deterministic {
            r
        } else {
            r.field("elapsed_ms", started.elapsed().as_millis().to_string())
        }
    }
}

fn outcome(r: &CheckReport) -> &'static str {
    if r.all_pass() {
        "PASS"
    } else {
        "FAIL"
    }
}

fn fingerprint_text(f: &Fingerprint) -> String {
    let auts: Vec<String> = f.aut_sizes.iter().map(usize::to_string).collect();
    format!("pi0={} pi1={} aut=[{}]", f.pi0, f.pi1, auts.join(","))
}

/// Run one command: `(stdout document, report, exit code)`.
fn run(cmd: &Command, ctx: &Ctx) -> Result<(Option<String>, ReportDoc, u8)> {
    let started = Instant::now();
    match cmd {
        Command::Validate { input } => {
            let doc = load(input)?;
            let rep = doc.validate()?;
            let code = u8::from(!rep.all_pass());
            let r = ReportDoc::new(rep.clone())
                .field("command", "validate")
                .field("kind", doc.kind())
                .field("result", outcome(&rep));
            Ok((None, ctx.finish(r, started), code))
        }
        Command::Construct { what, inputs } => {
            let need = match what {
                What::Biproduct | What::Hom => 2,
                _ => 1,
            };
            if inputs.len() != need {
                return Err(Error::Reference(format!("expected {need} input(s), got {}", inputs.len())));
            }
            let first = load(&inputs[0])?;
            let out = match what {
                What::Kernel => Document::Module((*constructions::kernel(&mod_hom(first)?)?.ker).clone()),
                What::Cokernel => Document::Module((*constructions::cokernel(&mod_hom(first)?)?.coker).clone()),
                What::Pip => Document::Module((*constructions::pip(&mod_hom(first)?)?.pip).clone()),
                What::Copip => Document::Module((*constructions::copip(&mod_hom(first)?)?.copip).clone()),
                What::Root => {
                    let (a, b, al) = zero_two_morphism(first)?;
                    Document::Module((*constructions::root(&a, &b, &al)?.root).clone())
                }
                What::Coroot => {
                    let (a, b, al) = zero_two_morphism(first)?;
                    Document::Module((*constructions::coroot(&a, &b, &al)?.coroot).clone())
                }
                What::Im1 => Document::Module((*constructions::im1(&mod_hom(first)?)?).clone()),
                What::Im2 => Document::Module((*constructions::im2(&mod_hom(first)?)?).clone()),
                What::Im1pl => Document::Module((*constructions::im1_pl(&mod_hom(first)?)?).clone()),
                What::Im2pl => Document::Module((*constructions::im2_pl(&mod_hom(first)?)?).clone()),
                What::Biproduct => {
                    let (x, y) = (module_of(first, "input")?, module_of(load(&inputs[1])?, "input")?);
                    Document::Module((*biproduct(&x, &y)?.sum).clone())
                }
                What::End => {
                    let g = match first {
                        Document::TwoGroup(g) => g,
                        Document::Module(m) => m.carrier,
                        d => return Err(Error::Reference(format!("end needs a twogroup or module, got {}", d.kind()))),
                    };
                    Document::TwoRing((*end_ring(&g, &ctx.budget)?.ring).clone())
                }
                What::Hom => {
                    let (x, y) = (module_of(first, "input")?, module_of(load(&inputs[1])?, "input")?);
                    Document::TwoGroup(hom_two_group(&x, &y, &ctx.budget)?.group)
                }
            };
            let rep = out.validate()?;
            let code = u8::from(!rep.all_pass());
            let r = ReportDoc::new(rep.clone())
                .field("command", "construct")
                .field("kind", out.kind())
                .field("result", outcome(&rep));
            Ok((Some(serialize(&out)), ctx.finish(r, started), code))
        }
        Command::Equiv { a, b } => {
            let (x, y) = (module_of(load(a)?, "a")?, module_of(load(b)?, "b")?);
            let (fx, fy) = (invariants_fingerprint(&x.carrier), invariants_fingerprint(&y.carrier));
            let (found, nodes) = find_equivalence_stats(&x, &y, &ctx.budget)?;
            let mut rep = CheckReport::new();
            if found.is_some() {
                rep.pass("equiv.found");
            } else if fx != fy {
                rep.fail("equiv.found", vec!["fingerprint".into(), fingerprint_text(&fx), fingerprint_text(&fy)]);
            } else {
                rep.fail("equiv.found", vec!["EQUIV_NOT_FOUND".into(), format!("nodes={nodes}")]);
            }
            let code = u8::from(!rep.all_pass());
            let r = ReportDoc::new(rep.clone())
                .field("command", "equiv")
                .field("fingerprint_a", fingerprint_text(&fx))
                .field("fingerprint_b", fingerprint_text(&fy))
                .field("result", outcome(&rep));
            Ok((None, ctx.finish(r, started), code))
        }
        Command::Puppe { input } => {
            let rep = constructions::puppe_check_with(&mod_hom(load(input)?)?, &ctx.budget)?;
            let code = u8::from(!rep.all_pass());
            let r = ReportDoc::new(rep.clone()).field("command", "puppe").field("result", outcome(&rep));
            Ok((None, ctx.finish(r, started), code))
        }
        Command::Catalog { name } => {
            if name == "list" {
                let mut out = catalog_names().join("\n");
                out.push('\n');
                let r = ReportDoc::new(CheckReport::new()).field("command", "catalog");
                return Ok((Some(out), r, 0));
            }
            let doc = catalog_doc(name).ok_or_else(|| Error::Reference(format!("no catalog instance {name}")))?;
            let r = ReportDoc::new(CheckReport::new()).field("command", "catalog").field("kind", doc.kind());
            Ok((Some(serialize(&doc)), r, 0))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let env_budget = std::env::var("PICARD_BUDGET").ok().and_then(|v| v.parse().ok());
    let budget = match cli.budget.or(env_budget) {
        Some(n) => SearchBudget::with_candidates(n),
        None => SearchBudget::default(),
    };
    let ctx = Ctx { budget, deterministic: cli.deterministic, format: cli.format };
    let (stdout, stderr) = (std::io::stdout(), std::io::stderr());
    let (mut out, mut err) = (stdout.lock(), stderr.lock());
    let code = match run(&cli.command, &ctx) {
        Ok((doc, report, code)) => {
            match doc {
                // the document owns stdout; the report goes beside it
                Some(d) => {
                    let _ = out.write_all(d.as_bytes());
                    if !matches!(cli.command, Command::Catalog { .. }) {
                        let _ = err.write_all(ctx.render(&report).as_bytes());
                    }
                }
                None => {
                    let _ = out.write_all(ctx.render(&report).as_bytes());
                }
            }
            code
        }
        Err(e) => {
            let r = ReportDoc::new(CheckReport::new()).field("error", e.kind()).field("message", e.to_string());
            let _ = out.write_all(ctx.render(&r).as_bytes());
            let _ = writeln!(err, "{e}");
            if matches!(e, Error::BudgetExceeded(_)) {
                3
            } else {
                2
            }
        }
    };
    ExitCode::from(code)
}
