use clap::{Args, Parser, Subcommand, ValueEnum};
use twistroots::DataSetType;

#[derive(Debug, Parser)]
#[command(name = "twistroots", version, about = "Roots of Dehn twists on nonorientable surfaces")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    pub format: Format,

    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
    Markdown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
}

impl From<Kind> for DataSetType {
    fn from(k: Kind) -> Self {
        match k {
            Kind::A => DataSetType::A,
            Kind::B => DataSetType::B,
        }
    }
}

/// `--genus` is the genus parameter (`g` for type A, `g'` for type B);
/// `--surface-genus` is the genus of the nonorientable surface carrying the
/// twist.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GenusArg {
    #[arg(long, allow_negative_numbers = true)]
    pub genus: Option<i64>,

    #[arg(long, allow_negative_numbers = true)]
    pub surface_genus: Option<i64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List data sets, or one representative per equivalence class.
    Enumerate {
        #[arg(long = "type", value_enum)]
        kind: Kind,
        #[command(flatten)]
        genus: GenusArg,
        #[arg(long)]
        degree: Option<i64>,
        #[arg(long)]
        classes: bool,
    },
    /// Whether any root exists.
    Exists {
        #[arg(long = "type", value_enum)]
        kind: Kind,
        #[command(flatten)]
        genus: GenusArg,
    },
    /// Maximal root degree.
    Maxdeg {
        #[arg(long = "type", value_enum)]
        kind: Kind,
        #[command(flatten)]
        genus: GenusArg,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Census tables.
    Table {
        #[arg(value_enum)]
        which: TableKind,
        #[arg(long, default_value_t = 500)]
        limit: i64,
    },
    /// Primary roots: existence, or the explicit construction.
    Primary {
        #[arg(long = "type", value_enum)]
        kind: Kind,
        #[arg(long)]
        degree: i64,
        #[arg(long, allow_negative_numbers = true, required_unless_present = "construct")]
        genus: Option<i64>,
        #[arg(long, requires_all = ["g0", "m"])]
        construct: bool,
        #[arg(long, allow_negative_numbers = true)]
        g0: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        m: Option<i64>,
    },
    /// Mod 2 homology matrices of twists and the square-root search.
    Homology {
        #[arg(long, value_enum)]
        op: HomologyOp,
        /// Surface genus, i.e. the matrix dimension.
        #[arg(long)]
        genus: usize,
        /// Twist whose square root is sought (default: b for even genus, a1
        /// otherwise).
        #[arg(long, value_enum)]
        target: Option<Twist>,
    },
    /// Check the closed-form statements against search.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 200)]
        limit: i64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Brute,
    Closed,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Exceptional,
    CensusB,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HomologyOp {
    PsiA1,
    PsiB,
    Sqrt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Twist {
    A1,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Thm32,
    Thm41,
    Thm45,
    Thm51,
    Thm52,
    Cor53,
    Prop21,
}
