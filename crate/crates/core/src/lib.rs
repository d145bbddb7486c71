//! Market-reaction labeling toolkit for financial headlines.
//!
//! The library turns dated headlines plus per-ticker closing-price history
//! into sentiment labels driven by the observed next-day market reaction,
//! aggregates those labels into a daily signal, and evaluates the signal
//! with a long/short backtest and a seeded perturbation harness.
//!
//! # Modules
//!
//! - [`corpus`]: data model and file ingestion (headlines JSONL, prices CSV,
//!   labeled JSONL)
//! - [`enrich`]: LLM-backed headline extraction and ticker assignment behind
//!   a record/replay chat client
//! - [`labeler`]: event returns, rolling quantile thresholds, and
//!   majority-vote sentiment aggregation
//! - [`signal`]: daily sentiment scores
//! - [`backtest`]: positions, strategy returns, Sharpe ratio and significance
//! - [`robustness`]: sliding-window headline exchange and Sharpe-difference
//!   grids
//! - [`report`]: label distribution, term frequencies, ticker shares, and
//!   date splits

pub mod backtest;
pub mod corpus;
pub mod enrich;
pub mod labeler;
pub mod report;
pub mod robustness;
pub mod signal;

pub use corpus::{Headline, LabeledHeadline, PriceBar, PriceSeries, PriceStore, Sentiment};
pub use labeler::LabelConfig;
pub use signal::DailyScore;
