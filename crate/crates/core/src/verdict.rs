//! Structured answers to "is α a p-zero divisor?".

use std::fmt;

use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictStatus {
    /// Some nonzero β in the relevant space has α∗β = 0.
    ZeroDivisor,
    /// α∗β ≠ 0 for every nonzero β in the relevant space.
    NonzeroDivisor,
    /// The criterion used does not decide the question.
    Unknown,
    /// The input lies outside the hypotheses of every available criterion.
    OutOfScope,
}

impl fmt::Display for VerdictStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerdictStatus::ZeroDivisor => "zero-divisor",
            VerdictStatus::NonzeroDivisor => "nonzero-divisor",
            VerdictStatus::Unknown => "unknown",
            VerdictStatus::OutOfScope => "out-of-scope",
        })
    }
}

/// The result a verdict rests on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Citation {
    /// No p-zero divisors in ℂℤ^d for p ≤ 2d/(d−1).
    AbelianExponentBound,
    /// Uniform nonzero divisors in ℂℤ^d are exactly those whose zero set
    /// lies in finitely many hyperplanes.
    HyperplaneCover,
    /// Zero divisor iff p > 2(d−ν)/(d−1−ν) for zero sets of constant
    /// relative nullity ν.
    RelativeNullity,
    /// A radial α is annihilated by φ_z exactly when its Gelfand transform
    /// vanishes at z; no such z means no bounded annihilator.
    SphericalAnnihilator,
    /// Radial α is a p-zero divisor for every p above p(α).
    RadialCriticalExponent,
    /// A witness pulled back through a free-subgroup embedding.
    FreeSubgroupTransfer,
}

impl Citation {
    pub fn tag(&self) -> &'static str {
        match self {
            Citation::AbelianExponentBound => "abelian-exponent-bound",
            Citation::HyperplaneCover => "hyperplane-cover",
            Citation::RelativeNullity => "relative-nullity",
            Citation::SphericalAnnihilator => "spherical-annihilator",
            Citation::RadialCriticalExponent => "radial-critical-exponent",
            Citation::FreeSubgroupTransfer => "free-subgroup-transfer",
        }
    }
}

impl fmt::Display for Citation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A handle naming the function that annihilates α.
#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    /// The spherical function φ_z on F_k. Off the real axis such witnesses
    /// are marked experimental.
    SphericalFunction {
        rank: u32,
        z: Complex64,
        experimental: bool,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::SphericalFunction {
                rank,
                z,
                experimental,
            } => {
                write!(f, "phi_z on F_{rank} at z = {} {}", z.re, z.im)?;
                if *experimental {
                    f.write_str(" (experimental)")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Caveat {
    /// The smooth constant-nullity hypothesis was only sampled, not proved.
    HypothesisNotCertified,
    /// Evidence comes from finitely many sample points.
    SampledEvidence,
}

impl fmt::Display for Caveat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Caveat::HypothesisNotCertified => "hypothesis-not-certified",
            Caveat::SampledEvidence => "sampled-evidence",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub status: VerdictStatus,
    /// Exponent threshold the verdict compares against, when one exists.
    pub threshold: Option<f64>,
    pub witness: Option<Witness>,
    pub citation: Citation,
    pub caveats: Vec<Caveat>,
}

impl Verdict {
    pub fn new(status: VerdictStatus, citation: Citation) -> Verdict {
        Verdict {
            status,
            threshold: None,
            witness: None,
            citation,
            caveats: Vec::new(),
        }
    }

    pub fn with_threshold(mut self, t: f64) -> Verdict {
        self.threshold = Some(t);
        self
    }

    pub fn with_witness(mut self, w: Witness) -> Verdict {
        self.witness = Some(w);
        self
    }

    pub fn with_caveat(mut self, c: Caveat) -> Verdict {
        self.caveats.push(c);
        self
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.status, self.citation)?;
        if let Some(t) = self.threshold {
            write!(f, " threshold={t}")?;
        }
        if let Some(w) = &self.witness {
            write!(f, " witness={w}")?;
        }
        for c in &self.caveats {
            write!(f, " caveat={c}")?;
        }
        Ok(())
    }
}
