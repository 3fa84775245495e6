use clap::{Args, Parser, Subcommand, ValueEnum};

/// Default tolerance for identity checks.
pub const DEFAULT_TOL: f64 = 1e-8;

#[derive(Debug, Parser)]
#[command(
    name = "regprod",
    version,
    about = "Alternating Hurwitz zeta, modified gamma and regularized alternating products"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl Format {
    pub fn as_str(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a single special-function value.
    Eval {
        #[command(subcommand)]
        target: EvalTarget,
    },
    /// Compare both sides of a product identity.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Emit a table of values.
    Table {
        #[command(subcommand)]
        target: TableTarget,
    },
    /// Compare summation strategies.
    Bench {
        #[command(subcommand)]
        target: BenchTarget,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ZetaMethodArg {
    Split,
    Direct,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Closed,
    Product,
    Series,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TailArg {
    Eta,
    Paired,
}

#[derive(Debug, Subcommand)]
pub enum EvalTarget {
    /// Alternating Hurwitz zeta ζ_E(s, z).
    ZetaE {
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long, value_enum, default_value_t = ZetaMethodArg::Split)]
        method: ZetaMethodArg,
    },
    /// Modified gamma function Γ̃(z).
    GammaTilde {
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long, value_enum, default_value_t = RouteArg::Closed)]
        route: RouteArg,
    },
    /// Modified digamma ψ̃(z) or its n-th derivative.
    PsiTilde {
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Modified Stieltjes constant γ̃_k(z).
    Stieltjes {
        #[arg(long)]
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
    },
}

#[derive(Debug, Args)]
pub struct TolArg {
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
}

#[derive(Debug, Subcommand)]
pub enum VerifyTarget {
    /// Regularized product of the shifts against (π/2)^{n/2} / ∏ Γ̃(z_j).
    Mizuno {
        /// Comma-separated shifts, e.g. "1,0.5+2i,(3,-1)".
        #[arg(long, allow_hyphen_values = true)]
        zs: String,
        #[arg(long)]
        cutoff: Option<usize>,
        #[arg(long, value_enum, default_value_t = TailArg::Eta)]
        tail: TailArg,
        #[command(flatten)]
        tol: TolArg,
    },
    /// Shifts x − ζ^j y over the n-th roots of unity.
    Kurokawa {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[command(flatten)]
        tol: TolArg,
    },
    /// Single-shift product against √(π/2)/Γ̃(x).
    Lerch {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[command(flatten)]
        tol: TolArg,
    },
    /// Regularized ∏(m + z) against √(2π)/Γ(z).
    LerchClassical {
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[command(flatten)]
        tol: TolArg,
    },
    /// Extrapolated Wallis product against π/2.
    Wallis {
        #[arg(long, default_value_t = 100_000)]
        pairs: usize,
        #[command(flatten)]
        tol: TolArg,
    },
    /// Randomized sweep with property checks.
    Suite {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: usize,
        #[command(flatten)]
        tol: TolArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum TableTarget {
    /// Γ̃, log Γ̃ and ψ̃ on a real grid.
    GammaTilde {
        #[arg(long, allow_hyphen_values = true)]
        from: f64,
        #[arg(long, allow_hyphen_values = true)]
        to: f64,
        #[arg(long)]
        step: f64,
    },
}

#[derive(Debug, Subcommand)]
pub enum BenchTarget {
    /// Accuracy and wall time of summation strategies for Λ*′(0).
    Accel {
        #[arg(long, allow_hyphen_values = true)]
        spec: String,
        /// Any of paired, eta-expansion, direct, richardson.
        #[arg(long, default_value = "paired,eta-expansion")]
        methods: String,
        /// Term budgets; scientific notation accepted.
        #[arg(long, default_value = "1e3,1e4,1e5")]
        sizes: String,
    },
}
