//! The `braidsig` command line.
//!
//! Exit codes: `0` success or accepted, `1` signature rejected (or attack found
//! nothing), `2` malformed input or usage error. Every command is a pure function of
//! its flags, `--seed` and `--now`, so re-running reproduces output files byte for byte.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::braid::{random_reduced_braid, GroupParams, NormalForm, Subgroup};
use crate::codec::{self, CodecError, Encodable, Kind};
use crate::conjugacy::{brute_force_csp, solve_base_problem, SearchSpace, WorkCounters};
use crate::preset::Preset;
use crate::schemes::{self, KeyPair, ProxyKey, PublicKey, SchemeError, SchemeParams, VerifyOutcome, Warrant};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "braidsig", version, about = "Braid-group proxy and designated-verifier signatures (toy parameters)")]
struct Cli {
    /// Parameter preset: toy-6 or toy-8.
    #[arg(long, global = true, default_value = "toy-6")]
    preset: String,
    /// Seed for every random choice the command makes.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Current time in Unix seconds (defaults to the system clock).
    #[arg(long, global = true)]
    now: Option<u64>,
    /// Sample z_o from LB_l instead of the full group.
    #[arg(long, global = true)]
    faithful: bool,
    /// Print conjugacy work counters as key=value lines.
    #[arg(long, global = true)]
    stats: bool,
    /// Write output files as base-64 text instead of raw bytes.
    #[arg(long, global = true)]
    armor: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a key pair.
    Keygen {
        #[arg(long)]
        out: PathBuf,
        /// Also write the public half on its own.
        #[arg(long)]
        pub_out: Option<PathBuf>,
    },
    /// Issue a warrant and delegation token to a proxy.
    Delegate {
        /// The original signer's key pair.
        #[arg(long)]
        key: PathBuf,
        #[arg(long)]
        original_id: String,
        #[arg(long)]
        proxy_id: String,
        /// Defaults to --now.
        #[arg(long)]
        valid_from: Option<u64>,
        /// Defaults to one day after the start of the window.
        #[arg(long)]
        valid_to: Option<u64>,
        /// The message the proxy may sign.
        #[arg(long)]
        scope: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check a delegation and derive the proxy key.
    AcceptDelegation {
        /// The proxy's key pair.
        #[arg(long)]
        key: PathBuf,
        /// The original signer's public key.
        #[arg(long)]
        signer: PathBuf,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Sign. Bi-designated schemes write one file per verifier (--out, --out2).
    Sign {
        #[arg(long, value_enum)]
        scheme: SchemeName,
        /// The signing party's key pair (the proxy for proxy schemes).
        #[arg(long)]
        key: PathBuf,
        /// Proxy key from accept-delegation (proxy, dvps, bidvps).
        #[arg(long)]
        proxy_key: Option<PathBuf>,
        /// Original signer's public key (proxy).
        #[arg(long)]
        signer: Option<PathBuf>,
        /// Designated verifier's public key (the first one for bi-designated schemes).
        #[arg(long)]
        verifier: Option<PathBuf>,
        /// Second designated verifier's public key.
        #[arg(long)]
        verifier2: Option<PathBuf>,
        /// Message text (dvs, bidvs). Proxy schemes sign the warrant.
        #[arg(long, conflicts_with = "message_file")]
        message: Option<String>,
        #[arg(long)]
        message_file: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        out2: Option<PathBuf>,
    },
    /// Verify a signature file.
    Verify {
        #[arg(long, value_enum)]
        scheme: SchemeName,
        #[arg(long = "in")]
        input: PathBuf,
        /// Designated verifier's key pair (dvs, bidvs, dvps, bidvps).
        #[arg(long)]
        key: Option<PathBuf>,
        /// Original signer's public key (proxy, dvs, bidvs).
        #[arg(long)]
        signer: Option<PathBuf>,
        /// Proxy signer's public key (proxy, dvps, bidvps).
        #[arg(long)]
        proxy: Option<PathBuf>,
    },
    /// Brute-force a toy instance to show the presets are insecure.
    Attack {
        #[arg(long, value_enum)]
        target: Target,
        /// Longest conjugator word tried.
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        /// Length of the freshly sampled secret when no --in is given.
        #[arg(long, default_value_t = 3)]
        secret_len: usize,
        /// Attack this public key instead of a fresh one (csp, gcsp).
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Time honest sign/verify round trips for every scheme.
    Bench {
        #[arg(long, default_value_t = 5)]
        runs: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SchemeName {
    Proxy,
    Dvs,
    Bidvs,
    Dvps,
    Bidvps,
}

impl SchemeName {
    pub const ALL: [SchemeName; 5] =
        [SchemeName::Proxy, SchemeName::Dvs, SchemeName::Bidvs, SchemeName::Dvps, SchemeName::Bidvps];

    pub fn kind(self) -> Kind {
        match self {
            SchemeName::Proxy => Kind::Proxy,
            SchemeName::Dvs => Kind::Dvs,
            SchemeName::Bidvs => Kind::BiDvs,
            SchemeName::Dvps => Kind::Dvps,
            SchemeName::Bidvps => Kind::BiDvps,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Target {
    /// Any conjugator between x and x'.
    Csp,
    /// A conjugator inside RB_r.
    Gcsp,
    /// Recover a_c·α·a_c⁻¹ without a_c.
    Base1,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Codec { path: PathBuf, source: CodecError },
    #[error(transparent)]
    Scheme(#[from] SchemeError),
    #[error(transparent)]
    Write(#[from] std::io::Error),
}

/// Runs the CLI with `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

struct Ctx {
    preset: Preset,
    sp: SchemeParams,
    seed: u64,
    now: u64,
    stats: bool,
    armor: bool,
}

impl Ctx {
    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    fn load<T: Encodable>(&self, path: &Path) -> Result<T, CliError> {
        let raw = std::fs::read(path).map_err(|source| CliError::Io { path: path.into(), source })?;
        let wrap = |source| CliError::Codec { path: path.into(), source };
        let bytes = codec::dearmor(&raw).map_err(wrap)?;
        let (value, params) = codec::decode::<T>(&bytes).map_err(wrap)?;
        self.check_params(path, params)?;
        Ok(value)
    }

    /// A public key from either a public-key file or a full key-pair file.
    fn load_public(&self, path: &Path) -> Result<PublicKey, CliError> {
        let raw = std::fs::read(path).map_err(|source| CliError::Io { path: path.into(), source })?;
        let bytes = codec::dearmor(&raw).map_err(|source| CliError::Codec { path: path.into(), source })?;
        match codec::peek(&bytes) {
            Ok(h) if h.kind == Kind::KeyPair => Ok(self.load::<KeyPair>(path)?.public().clone()),
            _ => self.load::<PublicKey>(path),
        }
    }

    fn check_params(&self, path: &Path, params: GroupParams) -> Result<(), CliError> {
        if params != self.sp.group {
            return Err(CliError::Usage(format!(
                "{}: file is for l={}, r={} but preset {} has l={}, r={}",
                path.display(),
                params.l(),
                params.r(),
                self.preset.name,
                self.preset.l,
                self.preset.r
            )));
        }
        Ok(())
    }

    fn save<T: Encodable>(&self, path: &Path, value: &T) -> Result<(), CliError> {
        let bytes = codec::encode(value, self.sp.group);
        let data = if self.armor {
            codec::armor(&bytes).expect("freshly encoded envelope").into_bytes()
        } else {
            bytes
        };
        std::fs::write(path, data).map_err(|source| CliError::Io { path: path.into(), source })
    }
}

fn required<'a>(opt: &'a Option<PathBuf>, flag: &str, scheme: SchemeName) -> Result<&'a Path, CliError> {
    opt.as_deref().ok_or_else(|| CliError::Usage(format!("--{flag} is required for --scheme {scheme:?}")))
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let preset = Preset::by_name(&cli.preset)
        .ok_or_else(|| CliError::Usage(format!("unknown preset {:?} (toy-6, toy-8)", cli.preset)))?;
    let mut sp = preset.scheme_params();
    sp.faithful = cli.faithful;
    let now = cli
        .now
        .unwrap_or_else(|| SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0));
    let ctx = Ctx { preset, sp, seed: cli.seed, now, stats: cli.stats, armor: cli.armor };

    match cli.command {
        Command::Keygen { out: path, pub_out } => {
            let kp = schemes::keygen(&ctx.sp, &mut ctx.rng())?;
            ctx.save(&path, &kp)?;
            if let Some(p) = pub_out {
                ctx.save(&p, kp.public())?;
            }
            writeln!(out, "wrote {}", path.display())?;
            Ok(EXIT_OK)
        }
        Command::Delegate { key, original_id, proxy_id, valid_from, valid_to, scope, out: path } => {
            let signer: KeyPair = ctx.load(&key)?;
            let from = valid_from.unwrap_or(ctx.now);
            let to = valid_to.unwrap_or(from.saturating_add(86_400));
            let warrant = Warrant::new(original_id, proxy_id, from, to, scope)?;
            let d = schemes::delegate(&signer, warrant, &ctx.sp, &mut ctx.rng())?;
            ctx.save(&path, &d)?;
            writeln!(out, "wrote {}", path.display())?;
            Ok(EXIT_OK)
        }
        Command::AcceptDelegation { key, signer, input, out: path } => {
            let proxy: KeyPair = ctx.load(&key)?;
            let signer = ctx.load_public(&signer)?;
            let d = ctx.load(&input)?;
            match schemes::accept_delegation(&proxy, &d, &signer, &ctx.sp.caps) {
                Ok((pkey, work)) => {
                    ctx.save(&path, &pkey)?;
                    writeln!(out, "delegation accepted; wrote {}", path.display())?;
                    print_stats(&ctx, out, &work)?;
                    Ok(EXIT_OK)
                }
                Err(e @ (SchemeError::DelegationCheckFailed | SchemeError::ConjugacyInconclusive)) => {
                    writeln!(out, "rejected: {e}")?;
                    Ok(EXIT_REJECTED)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Sign { scheme, key, proxy_key, signer, verifier, verifier2, message, message_file, out: path, out2 } => {
            let me: KeyPair = ctx.load(&key)?;
            let message = match (message, message_file) {
                (Some(m), _) => Some(m.into_bytes()),
                (None, Some(p)) => Some(std::fs::read(&p).map_err(|source| CliError::Io { path: p, source })?),
                (None, None) => None,
            };
            let need_message = || {
                message.clone().ok_or_else(|| CliError::Usage(format!("--message is required for --scheme {scheme:?}")))
            };
            let pkey = |ctx: &Ctx| -> Result<ProxyKey, CliError> { ctx.load(required(&proxy_key, "proxy-key", scheme)?) };
            let pair_out = || required(&out2, "out2", scheme);
            let mut rng = ctx.rng();
            match scheme {
                SchemeName::Proxy => {
                    let signer = ctx.load_public(required(&signer, "signer", scheme)?)?;
                    let sig = schemes::proxy_sign(&pkey(&ctx)?, &me, &signer, &ctx.sp, &mut rng)?;
                    ctx.save(&path, &sig)?;
                }
                SchemeName::Dvs => {
                    let v = ctx.load_public(required(&verifier, "verifier", scheme)?)?;
                    let sig = schemes::dvs_sign(&me, &v, &need_message()?, &ctx.sp, &mut rng)?;
                    ctx.save(&path, &sig)?;
                }
                SchemeName::Bidvs => {
                    let v1 = ctx.load_public(required(&verifier, "verifier", scheme)?)?;
                    let v2 = ctx.load_public(required(&verifier2, "verifier2", scheme)?)?;
                    let path2 = pair_out()?;
                    let (s1, s2) = schemes::bidvs_sign(&me, &v1, &v2, &need_message()?, &ctx.sp, &mut rng)?;
                    ctx.save(&path, &s1)?;
                    ctx.save(path2, &s2)?;
                }
                SchemeName::Dvps => {
                    let v = ctx.load_public(required(&verifier, "verifier", scheme)?)?;
                    let sig = schemes::dvps_sign(&pkey(&ctx)?, &me, &v, &ctx.sp, &mut rng)?;
                    ctx.save(&path, &sig)?;
                }
                SchemeName::Bidvps => {
                    let v1 = ctx.load_public(required(&verifier, "verifier", scheme)?)?;
                    let v2 = ctx.load_public(required(&verifier2, "verifier2", scheme)?)?;
                    let path2 = pair_out()?;
                    let (s1, s2) = schemes::bidvps_sign(&pkey(&ctx)?, &me, &v1, &v2, &ctx.sp, &mut rng)?;
                    ctx.save(&path, &s1)?;
                    ctx.save(path2, &s2)?;
                }
            }
            writeln!(out, "wrote {}", path.display())?;
            Ok(EXIT_OK)
        }
        Command::Verify { scheme, input, key, signer, proxy } => {
            let outcome = verify_file(&ctx, scheme, &input, &key, &signer, &proxy)?;
            report(&ctx, out, &outcome)
        }
        Command::Attack { target, max_len, secret_len, input } => attack(&ctx, out, target, max_len, secret_len, input),
        Command::Bench { runs } => bench(&ctx, out, runs),
    }
}

fn verify_file(
    ctx: &Ctx,
    scheme: SchemeName,
    input: &Path,
    key: &Option<PathBuf>,
    signer: &Option<PathBuf>,
    proxy: &Option<PathBuf>,
) -> Result<VerifyOutcome, CliError> {
    let verifier = || -> Result<KeyPair, CliError> { ctx.load(required(key, "key", scheme)?) };
    let signer = || ctx.load_public(required(signer, "signer", scheme)?);
    let proxy = || ctx.load_public(required(proxy, "proxy", scheme)?);
    let (sp, now) = (&ctx.sp, ctx.now);
    Ok(match scheme {
        SchemeName::Proxy => schemes::proxy_verify(&ctx.load(input)?, &signer()?, &proxy()?, now, sp),
        SchemeName::Dvs => schemes::dvs_verify(&ctx.load(input)?, &verifier()?, &signer()?, sp),
        SchemeName::Bidvs => schemes::bidvs_verify(&ctx.load(input)?, &verifier()?, &signer()?, sp),
        SchemeName::Dvps => schemes::dvps_verify(&ctx.load(input)?, &verifier()?, &proxy()?, now, sp),
        SchemeName::Bidvps => schemes::bidvps_verify(&ctx.load(input)?, &verifier()?, &proxy()?, now, sp),
    })
}

fn report(ctx: &Ctx, out: &mut dyn Write, outcome: &VerifyOutcome) -> Result<i32, CliError> {
    if outcome.accepted {
        writeln!(out, "accepted")?;
    } else {
        let check = outcome.failed_check.map(|c| c.label()).unwrap_or("unknown");
        let note = if outcome.inconclusive { " (inconclusive)" } else { "" };
        writeln!(out, "rejected: failed_check={check}{note}")?;
    }
    print_stats(ctx, out, &outcome.work)?;
    Ok(if outcome.accepted { EXIT_OK } else { EXIT_REJECTED })
}

fn print_stats(ctx: &Ctx, out: &mut dyn Write, work: &WorkCounters) -> Result<(), CliError> {
    if ctx.stats {
        write!(out, "{}", work.to_kv_lines())?;
    }
    Ok(())
}

fn attack(
    ctx: &Ctx,
    out: &mut dyn Write,
    target: Target,
    max_len: usize,
    secret_len: usize,
    input: Option<PathBuf>,
) -> Result<i32, CliError> {
    let group = ctx.sp.group;
    let mut rng = ctx.rng();
    let fresh = |rng: &mut ChaCha8Rng, out: &mut dyn Write| -> Result<KeyPair, CliError> {
        let x = random_reduced_braid(&group, Subgroup::Full, ctx.sp.key_length, rng).map_err(SchemeError::from)?;
        let a = random_reduced_braid(&group, Subgroup::Right, secret_len, rng).map_err(SchemeError::from)?;
        writeln!(out, "target secret: {a}")?;
        Ok(KeyPair::from_parts(group, a, x.normal_form())?)
    };
    let start = Instant::now();
    match target {
        Target::Csp | Target::Gcsp => {
            let public = match &input {
                Some(p) => ctx.load_public(p)?,
                None => fresh(&mut rng, out)?.public().clone(),
            };
            let space = if target == Target::Csp {
                SearchSpace::Full(group.n())
            } else {
                SearchSpace::Subgroup(group, Subgroup::Right)
            };
            let found = brute_force_csp(&public.x, &public.x_prime, space, max_len);
            let ms = start.elapsed().as_millis();
            match found {
                Some(c) => {
                    let ok = public.x.conjugate_by(&c.normal_form()) == public.x_prime;
                    writeln!(out, "recovered conjugator: {c}")?;
                    writeln!(out, "c·x·c⁻¹ = x': {ok}")?;
                    writeln!(out, "elapsed_ms={ms}")?;
                    Ok(if ok { EXIT_OK } else { EXIT_REJECTED })
                }
                None => {
                    writeln!(out, "not found ≤ {max_len}")?;
                    writeln!(out, "elapsed_ms={ms}")?;
                    Ok(EXIT_REJECTED)
                }
            }
        }
        Target::Base1 => {
            if input.is_some() {
                return Err(CliError::Usage("--in is not used with --target base1".into()));
            }
            let verifier = fresh(&mut rng, out)?;
            let b = random_reduced_braid(&group, Subgroup::Left, ctx.sp.ephemeral_length, &mut rng)
                .map_err(SchemeError::from)?
                .normal_form();
            let (x_c, x_c_prime) = (&verifier.public().x, &verifier.public().x_prime);
            let alpha = x_c.conjugate_by(&b);
            let expected: NormalForm = alpha.conjugate_by(verifier.secret());
            let found = solve_base_problem(&group, x_c, x_c_prime, &alpha, max_len);
            let ms = start.elapsed().as_millis();
            match found {
                Some((c, beta)) => {
                    let ok = beta == expected;
                    writeln!(out, "recovered conjugator: {c}")?;
                    writeln!(out, "a_c·α·a_c⁻¹ reproduced: {ok}")?;
                    writeln!(out, "elapsed_ms={ms}")?;
                    Ok(if ok { EXIT_OK } else { EXIT_REJECTED })
                }
                None => {
                    writeln!(out, "not found ≤ {max_len}")?;
                    writeln!(out, "elapsed_ms={ms}")?;
                    Ok(EXIT_REJECTED)
                }
            }
        }
    }
}

/// One honest round trip of `scheme` with everything derived from `seed`. Returns
/// the verifier outcomes (two for bi-designated schemes).
pub fn honest_round_trip(scheme: SchemeName, sp: &SchemeParams, seed: u64) -> Result<Vec<VerifyOutcome>, SchemeError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let alice = schemes::keygen(sp, &mut rng)?;
    let bob = schemes::keygen(sp, &mut rng)?;
    let cindy = schemes::keygen(sp, &mut rng)?;
    let trevor = schemes::keygen(sp, &mut rng)?;
    let now = 1_000;
    let delegated = |rng: &mut ChaCha8Rng| -> Result<ProxyKey, SchemeError> {
        let w = Warrant::new("alice", "bob", 0, 2_000, format!("scope {seed}"))?;
        let d = schemes::delegate(&alice, w, sp, rng)?;
        Ok(schemes::accept_delegation(&bob, &d, alice.public(), &sp.caps)?.0)
    };
    let msg = format!("message {seed}").into_bytes();
    Ok(match scheme {
        SchemeName::Proxy => {
            let pk = delegated(&mut rng)?;
            let sig = schemes::proxy_sign(&pk, &bob, alice.public(), sp, &mut rng)?;
            vec![schemes::proxy_verify(&sig, alice.public(), bob.public(), now, sp)]
        }
        SchemeName::Dvs => {
            let sig = schemes::dvs_sign(&alice, cindy.public(), &msg, sp, &mut rng)?;
            vec![schemes::dvs_verify(&sig, &cindy, alice.public(), sp)]
        }
        SchemeName::Bidvs => {
            let (s1, s2) = schemes::bidvs_sign(&alice, cindy.public(), trevor.public(), &msg, sp, &mut rng)?;
            vec![
                schemes::bidvs_verify(&s1, &cindy, alice.public(), sp),
                schemes::bidvs_verify(&s2, &trevor, alice.public(), sp),
            ]
        }
        SchemeName::Dvps => {
            let pk = delegated(&mut rng)?;
            let sig = schemes::dvps_sign(&pk, &bob, cindy.public(), sp, &mut rng)?;
            vec![schemes::dvps_verify(&sig, &cindy, bob.public(), now, sp)]
        }
        SchemeName::Bidvps => {
            let pk = delegated(&mut rng)?;
            let (s1, s2) = schemes::bidvps_sign(&pk, &bob, cindy.public(), trevor.public(), sp, &mut rng)?;
            vec![
                schemes::bidvps_verify(&s1, &cindy, bob.public(), now, sp),
                schemes::bidvps_verify(&s2, &trevor, bob.public(), now, sp),
            ]
        }
    })
}

fn bench(ctx: &Ctx, out: &mut dyn Write, runs: u64) -> Result<i32, CliError> {
    let mut all_ok = true;
    for scheme in SchemeName::ALL {
        let start = Instant::now();
        let mut accepted = 0;
        let mut work = WorkCounters::default();
        for i in 0..runs {
            let outcomes = honest_round_trip(scheme, &ctx.sp, ctx.seed.wrapping_add(i))?;
            if outcomes.iter().all(|o| o.accepted) {
                accepted += 1;
            }
            outcomes.iter().for_each(|o| work.absorb(&o.work));
        }
        all_ok &= accepted == runs;
        let name = format!("{scheme:?}").to_lowercase();
        writeln!(out, "scheme={name} runs={runs} accepted={accepted} ms={}", start.elapsed().as_millis())?;
        if ctx.stats {
            for line in work.to_kv_lines().lines() {
                writeln!(out, "  {line}")?;
            }
        }
    }
    Ok(if all_ok { EXIT_OK } else { EXIT_REJECTED })
}
