//! Command execution. Each command writes to a caller-supplied sink and
//! returns the process exit code.

use std::io::Write;
use std::time::Instant;

use hotelmc_core::symmetry::canonical_initial_states;
use hotelmc_core::{
    bounded_sweep, check, hybrid_check, no_bad_entry, CheckError, CheckSemantics, DeadlockPolicy, HotelConfig,
    HotelState, HotelSystem, HybridOptions, ObligationSystem, StutterMode, Verdict, VerdictKind, DEFAULT_DFS_DEPTH,
};
use serde::Serialize;

use crate::args::{
    CheckArgs, Command, DeadlockArg, EnumerateArgs, Format, Mode, NoInterveningArg, StutterArg, SweepArgs, ValidateArgs,
};
use crate::error::CliError;
use crate::report::{self, ConfigJson, Report, SemanticsJson, StatsJson, RESOURCE_EXHAUSTED};
use crate::text;

pub const EXIT_VERIFIED: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BOUND: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;

/// Exit code for a verdict string; depends on nothing else.
pub fn exit_code(verdict: &str) -> i32 {
    match report::verdict_kind(verdict) {
        Some(VerdictKind::Verified) => EXIT_VERIFIED,
        Some(VerdictKind::CounterExample | VerdictKind::Deadlock) => EXIT_VIOLATION,
        Some(VerdictKind::DepthExhausted) => EXIT_BOUND,
        None => EXIT_RESOURCE,
    }
}

pub fn run(command: &Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Enumerate(a) => enumerate(a, out),
        Command::Check(a) => {
            let report = execute(&check_spec(a)?)?;
            match a.format {
                Format::Json => out.write_all(report::render(&report).as_bytes())?,
                Format::Text => out.write_all(text::render(&report).as_bytes())?,
            }
            Ok(exit_code(&report.verdict))
        }
        Command::Sweep(a) => {
            match &a.output {
                Some(path) => sweep(a, &mut std::fs::File::create(path)?)?,
                None => sweep(a, out)?,
            }
            Ok(EXIT_VERIFIED)
        }
        Command::Validate(a) => validate(a, out),
    }
}

fn enumerate(a: &EnumerateArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let c = a.config.resolve()?;
    let states = if a.symmetry {
        canonical_initial_states(&c)
    } else {
        hotelmc_core::model::enumerate_initial_states(&c)
    };
    if a.list {
        for s in &states {
            writeln!(out, "{}", text::state_line(&report::state_to_json(s, &c)))?;
        }
    }
    writeln!(out, "{}", states.len())?;
    Ok(EXIT_VERIFIED)
}

fn validate(a: &ValidateArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let input = if a.path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())?
    } else {
        std::fs::read_to_string(&a.path)?
    };
    let report = report::round_trip(&input)?;
    writeln!(out, "valid: {}", report.verdict)?;
    Ok(EXIT_VERIFIED)
}

/// Everything needed for one run, with defaults already applied.
#[derive(Clone, Debug)]
pub struct RunSpec {
    pub config: HotelConfig,
    pub mode: Mode,
    pub no_intervening: NoInterveningArg,
    pub stutter: StutterArg,
    pub deadlock: DeadlockArg,
    pub strict_deadlock: bool,
    pub symmetry: bool,
    pub depth: Option<usize>,
    pub trace_len: Option<usize>,
    pub workers: usize,
    pub max_states: Option<usize>,
}

fn check_spec(a: &CheckArgs) -> Result<RunSpec, CliError> {
    let spec = RunSpec {
        config: a.config.resolve()?,
        mode: a.mode,
        no_intervening: a.no_intervening,
        stutter: a.stutter,
        deadlock: a.deadlock,
        strict_deadlock: a.strict_deadlock,
        symmetry: a.symmetry,
        depth: a.depth,
        trace_len: a.trace_len.map(|t| t as usize),
        workers: a.workers as usize,
        max_states: a.max_states,
    };
    spec.validated()
}

impl RunSpec {
    /// Fills mode defaults and rejects combinations that have no meaning.
    pub fn validated(mut self) -> Result<Self, CliError> {
        match self.mode {
            Mode::Bounded => {
                if self.trace_len.is_none_or(|t| t == 0) {
                    return Err(CliError::Usage("bounded mode needs --trace-len T with T >= 1".into()));
                }
            }
            _ if self.trace_len.is_some() => {
                return Err(CliError::Usage("--trace-len only applies to bounded mode".into()));
            }
            Mode::Dfs => {
                let d = self.depth.get_or_insert(DEFAULT_DFS_DEPTH);
                if *d == 0 {
                    return Err(CliError::Usage("dfs needs --depth of at least 1".into()));
                }
            }
            _ => {}
        }
        if self.workers == 0 {
            return Err(CliError::Usage("at least one worker is required".into()));
        }
        if self.symmetry && self.no_intervening == NoInterveningArg::Alloy && self.mode != Mode::Bounded {
            return Err(CliError::Usage(
                "--symmetry cannot be combined with --no-intervening alloy outside bounded mode".into(),
            ));
        }
        Ok(self)
    }

    fn semantics(&self) -> CheckSemantics {
        let sem = match (self.mode, self.depth) {
            (Mode::Dfs, d) => CheckSemantics::dfs(d.unwrap_or(DEFAULT_DFS_DEPTH)),
            (_, Some(d)) => CheckSemantics::bfs_bounded(d),
            (_, None) => CheckSemantics::bfs(),
        };
        let stutter = match self.stutter {
            StutterArg::Label => StutterMode::LabelAware,
            StutterArg::Delta => StutterMode::Delta,
        };
        let deadlock = match self.deadlock {
            DeadlockArg::Ignore => DeadlockPolicy::Ignore,
            DeadlockArg::Flag => DeadlockPolicy::Flag,
        };
        sem.with_stutter(stutter)
            .with_deadlock(deadlock, self.strict_deadlock)
            .with_symmetry(self.symmetry)
            .with_max_states(self.max_states)
    }

    fn semantics_json(&self) -> SemanticsJson {
        SemanticsJson {
            mode: self.mode,
            no_intervening: self.no_intervening,
            stutter: self.stutter,
            deadlock: self.deadlock,
            strict_deadlock: self.strict_deadlock,
            symmetry: self.symmetry,
            depth: self.depth,
            trace_len: self.trace_len,
            workers: self.workers,
            max_states: self.max_states,
        }
    }
}

struct Raw {
    outcome: Result<Verdict<HotelState, hotelmc_core::ActionLabel>, CheckError>,
    states: usize,
    diameter: Option<usize>,
    tasks: Option<(usize, usize)>,
}

fn explicit<T>(ts: &T, property: &hotelmc_core::Property<T::State, T::Label>, spec: &RunSpec) -> Raw
where
    T: hotelmc_core::TransitionSystem<Label = hotelmc_core::ActionLabel>,
    T::State: IntoHotel,
{
    let sem = spec.semantics();
    if spec.mode == Mode::Hybrid {
        let opts = HybridOptions {
            symmetry: spec.symmetry,
            workers: spec.workers,
            short_circuit: false,
        };
        let rep = hybrid_check(ts, property, &sem, &opts).expect("worker count validated");
        let states = rep.states_explored();
        let tasks = Some((rep.task_count, rep.violating_tasks()));
        let diameter = match &rep.outcome {
            Ok(Verdict::Verified { diameter, .. }) => Some(*diameter),
            _ => None,
        };
        return Raw {
            outcome: rep.outcome.map(|v| v.map_states(IntoHotel::into_hotel)),
            states,
            diameter,
            tasks,
        };
    }
    match check(ts, property, &sem) {
        Ok(o) => Raw {
            states: o.states_explored,
            diameter: Some(o.diameter),
            outcome: Ok(o.verdict.map_states(IntoHotel::into_hotel)),
            tasks: None,
        },
        Err(e) => Raw {
            states: match e {
                CheckError::ResourceExhausted { states_explored } => states_explored,
                _ => 0,
            },
            outcome: Err(e),
            diameter: None,
            tasks: None,
        },
    }
}

trait IntoHotel {
    fn into_hotel(self) -> HotelState;
}

impl IntoHotel for HotelState {
    fn into_hotel(self) -> HotelState {
        self
    }
}

impl IntoHotel for hotelmc_core::Obliged<HotelState, hotelmc_core::ActionLabel> {
    fn into_hotel(self) -> HotelState {
        self.state
    }
}

/// Runs one check and packages the result.
pub fn execute(spec: &RunSpec) -> Result<Report, CliError> {
    let sys =
        HotelSystem::new(spec.config.clone()).with_tla_no_intervening(spec.no_intervening == NoInterveningArg::Tla);
    let alloy = spec.no_intervening == NoInterveningArg::Alloy;
    let raw = match spec.mode {
        Mode::Bounded => {
            let t = spec.trace_len.expect("validated");
            match bounded_sweep(&sys, &no_bad_entry(), t, alloy) {
                Ok(r) => Raw {
                    states: r.rows.iter().map(|row| row.nodes).sum(),
                    diameter: None,
                    outcome: Ok(r.verdict),
                    tasks: None,
                },
                Err(e) => return Err(CliError::Usage(e.to_string())),
            }
        }
        _ if alloy => {
            let lifted = ObligationSystem::<HotelSystem>::lift_property(&no_bad_entry());
            explicit(&ObligationSystem::new(sys), &lifted, spec)
        }
        _ => explicit(&sys, &no_bad_entry(), spec),
    };
    if let Err(CheckError::InvalidBound(msg)) = &raw.outcome {
        return Err(CliError::Usage(msg.to_string()));
    }
    let (verdict, trace) = match &raw.outcome {
        Ok(v) => (
            v.kind().as_str().to_string(),
            v.trace().map(|t| report::trace_to_json(t, &spec.config)),
        ),
        Err(_) => (RESOURCE_EXHAUSTED.to_string(), None),
    };
    Ok(Report {
        config: ConfigJson::from_config(&spec.config),
        semantics: spec.semantics_json(),
        verdict,
        stats: StatsJson {
            states: raw.states,
            diameter: raw.diameter,
            tasks: raw.tasks.map(|t| t.0),
            violating_tasks: raw.tasks.map(|t| t.1),
        },
        trace,
    })
}

/// CSV columns, in order. Stable; see the README.
pub const SWEEP_COLUMNS: [&str; 13] = [
    "mode",
    "n",
    "keys",
    "rooms",
    "guests",
    "exact_scope",
    "no_intervening",
    "stutter",
    "t_or_depth",
    "verdict",
    "ce_length",
    "states_explored",
    "ms",
];

#[derive(Debug, Serialize)]
pub struct SweepRecord {
    pub mode: Mode,
    pub n: usize,
    pub keys: usize,
    pub rooms: usize,
    pub guests: usize,
    pub exact_scope: bool,
    pub no_intervening: NoInterveningArg,
    pub stutter: StutterArg,
    /// Trace length for bounded rows, depth bound otherwise; empty if unbounded.
    pub t_or_depth: Option<usize>,
    pub verdict: String,
    pub ce_length: i64,
    pub states_explored: usize,
    pub ms: u128,
}

fn expand(ranges: &[std::ops::RangeInclusive<usize>]) -> Vec<usize> {
    ranges.iter().flat_map(|r| r.clone()).collect()
}

/// Run specs for the grid, in output order: n, mode, no-intervening,
/// stutter, then bound.
pub fn sweep_grid(a: &SweepArgs) -> Result<Vec<(usize, RunSpec)>, CliError> {
    let ts = expand(&a.t);
    let depths = expand(&a.depth);
    let mut grid = Vec::new();
    for n in expand(&a.n) {
        for &mode in &a.modes {
            let bounds: Vec<Option<usize>> = match mode {
                Mode::Bounded if ts.is_empty() => {
                    return Err(CliError::Usage("bounded rows need --t".into()));
                }
                Mode::Bounded => ts.iter().copied().map(Some).collect(),
                Mode::Dfs if depths.is_empty() => vec![Some(DEFAULT_DFS_DEPTH)],
                _ if depths.is_empty() => vec![None],
                _ => depths.iter().copied().map(Some).collect(),
            };
            for &ni in &a.no_intervening {
                for &stutter in &a.stutter {
                    for &bound in &bounds {
                        let (depth, trace_len) = if mode == Mode::Bounded {
                            (None, bound)
                        } else {
                            (bound, None)
                        };
                        let spec = RunSpec {
                            config: HotelConfig::uniform(n)?.with_exact_scope(a.exact_scope),
                            mode,
                            no_intervening: ni.for_mode(mode),
                            stutter,
                            deadlock: DeadlockArg::Ignore,
                            strict_deadlock: false,
                            symmetry: a.symmetry,
                            depth,
                            trace_len,
                            workers: a.workers as usize,
                            max_states: a.max_states,
                        }
                        .validated()?;
                        grid.push((n, spec));
                    }
                }
            }
        }
    }
    Ok(grid)
}

pub fn sweep(a: &SweepArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let grid = sweep_grid(a)?;
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(SWEEP_COLUMNS)?;
    for (n, spec) in grid {
        let start = Instant::now();
        let report = execute(&spec)?;
        let ms = start.elapsed().as_millis();
        let ce_length = match (&report.verdict[..], &report.trace) {
            ("counterexample", Some(t)) => t.states.len() as i64,
            _ => -1,
        };
        w.serialize(SweepRecord {
            mode: spec.mode,
            n,
            keys: spec.config.key_count(),
            rooms: spec.config.room_count(),
            guests: spec.config.guest_count(),
            exact_scope: spec.config.exact_scope(),
            no_intervening: spec.no_intervening,
            stutter: spec.stutter,
            t_or_depth: spec.trace_len.or(spec.depth),
            verdict: report.verdict,
            ce_length,
            states_explored: report.stats.states,
            ms,
        })?;
    }
    w.flush()?;
    Ok(())
}
