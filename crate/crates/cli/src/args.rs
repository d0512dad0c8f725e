use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "lincount", version, about = "Exact counts of maps from general pointed curves to projective space")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Plain)]
    pub format: Format,

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

#[derive(Debug, Subcommand)]
pub enum Command {
    /// L_{g,r,d}: maps of degree d from a general genus-g curve to P^r
    /// through n = (dr + d + r - rg)/r general point conditions.
    Tevelev(Grd),

    /// L'_{g,d,k}: pencils where the first k of the n = 2d + 1 - g marked
    /// points share one image.
    ///
    /// Indexing: k is the number of marked points mapping to the common
    /// target, so k = 1 is the ordinary count. Some references shift this
    /// index by one; only the convention here is accepted.
    Cps {
        #[arg(long = "g")]
        g: u32,
        #[arg(long = "d")]
        d: u32,
        #[arg(long = "k")]
        k: u32,
    },

    /// L_{g,r,d} with extra ramification imposed at further general points.
    Ramified {
        #[command(flatten)]
        grd: Grd,
        /// Ramification partition, e.g. "2,1"; repeat for each point.
        #[arg(long = "ram")]
        ram: Vec<String>,
    },

    /// Degree of the pullback of a Schubert cycle to the space of
    /// polynomial tuples.
    PullbackDegree {
        #[arg(long = "r")]
        r: u32,
        #[arg(long = "d")]
        d: u32,
        #[arg(long = "lambda", allow_hyphen_values = true)]
        lambda: String,
    },

    /// Number of g^r_d on a general curve of genus g = rs + s, d = rs + r.
    Castelnuovo {
        #[arg(long = "r")]
        r: u32,
        #[arg(long = "s")]
        s: u32,
    },

    /// Products and integrals in the cohomology of a Grassmannian.
    Schubert {
        #[command(subcommand)]
        op: SchubertOp,
    },

    /// Count (and optionally list) the red/blue grid fillings.
    Tableaux {
        #[command(flatten)]
        grd: Grd,
        /// Print the first N fillings.
        #[arg(long = "list", value_name = "N")]
        list: Option<usize>,
        /// Split the count by the shape of the red region.
        #[arg(long = "by-shape")]
        by_shape: bool,
    },

    /// Run a suite of independent cross-checks.
    Crosscheck {
        #[arg(long = "suite", value_enum)]
        suite: Suite,
        #[command(flatten)]
        caps: Caps,
    },

    /// Tabulate L or L' over ranges of g and d.
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        /// Inclusive range "A..B".
        #[arg(long = "g-range")]
        g_range: String,
        /// Inclusive range "A..B".
        #[arg(long = "d-range")]
        d_range: String,
        #[arg(long = "r", conflicts_with = "k")]
        r: Option<u32>,
        #[arg(long = "k")]
        k: Option<u32>,
        #[command(flatten)]
        caps: Caps,
    },
}

#[derive(Debug, Args)]
pub struct Grd {
    #[arg(long = "g")]
    pub g: u32,
    #[arg(long = "r")]
    pub r: u32,
    #[arg(long = "d")]
    pub d: u32,
}

/// Desk-scale limits on g and r for sweeps.
#[derive(Debug, Args)]
pub struct Caps {
    #[arg(long = "max-g", env = "LINCOUNT_MAX_G")]
    pub max_g: Option<u32>,
    #[arg(long = "max-r", env = "LINCOUNT_MAX_R")]
    pub max_r: Option<u32>,
}

#[derive(Debug, Subcommand)]
pub enum SchubertOp {
    /// Product of two expressions.
    Mul {
        /// Box as "K,M": Gr(K, K+M).
        #[arg(long = "box", value_name = "K,M")]
        shape: String,
        lhs: String,
        rhs: String,
    },
    /// Degree of the top-dimensional part of an expression.
    Integrate {
        #[arg(long = "box", value_name = "K,M")]
        shape: String,
        /// Product of factors like "s[1]^6 * s[2,1]".
        expr: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    R1,
    LargeD,
    Tableaux,
    Cps,
    Ramified,
    Castelnuovo,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Tevelev,
    Cps,
}
