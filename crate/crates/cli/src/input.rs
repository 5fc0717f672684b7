use clap::Args;

use girard::families::MAX_FAMILY_SIZE;
use girard::{Error, Family, FamilyKind, FamilySpec, VariableSet};

/// Where an alphabet comes from: an inline list or a family.
#[derive(Args)]
pub struct AlphabetArgs {
    /// Inline alphabet, comma-separated (`1/2,-3,q^2`).
    #[arg(long, conflicts_with_all = ["family", "spec"], allow_hyphen_values = true)]
    pub vars: Option<String>,
    /// Family kind, e.g. ONES or geometric-q.
    #[arg(long, conflicts_with = "spec")]
    pub family: Option<String>,
    /// Family parameters `k=v,k=v`.
    #[arg(long, requires = "family")]
    pub params: Option<String>,
    /// Family as JSON `{"kind":..,"params":{..}}`, or `@path` to read it from a file.
    #[arg(long)]
    pub spec: Option<String>,
}

pub struct Resolved {
    pub alphabet: VariableSet,
    pub family: Option<Family>,
}

/// Parses an inline alphabet; whitespace around entries is ignored.
pub fn parse_vars(text: &str) -> Result<VariableSet, Error> {
    let x: VariableSet = text.parse()?;
    if x.len() > MAX_FAMILY_SIZE {
        return Err(Error::invalid("vars", format!("more than {MAX_FAMILY_SIZE} entries")));
    }
    Ok(x)
}

impl AlphabetArgs {
    /// The unvalidated family spec, if a family was given.
    pub fn spec(&self) -> Result<Option<FamilySpec>, Error> {
        Ok(Some(match (&self.family, &self.spec) {
            (Some(kind), _) => {
                let kind: FamilyKind = kind.parse()?;
                FamilySpec::from_kv(kind, self.params.as_deref().unwrap_or(""))?
            }
            (None, Some(text)) => {
                let json = match text.strip_prefix('@') {
                    Some(path) => std::fs::read_to_string(path)
                        .map_err(|e| Error::Parse(format!("{path}: {e}")))?,
                    None => text.clone(),
                };
                FamilySpec::from_json(&json)?
            }
            (None, None) => return Ok(None),
        }))
    }

    pub fn resolve_optional(&self) -> Result<Option<Resolved>, Error> {
        if let Some(v) = &self.vars {
            return Ok(Some(Resolved {
                alphabet: parse_vars(v)?,
                family: None,
            }));
        }
        let Some(spec) = self.spec()? else {
            return Ok(None);
        };
        let family = spec.validate()?;
        Ok(Some(Resolved {
            alphabet: girard::family_alphabet(&family),
            family: Some(family),
        }))
    }

    pub fn resolve(&self) -> Result<Resolved, Error> {
        self.resolve_optional()?
            .ok_or_else(|| Error::Parse("give --vars, --family or --spec".into()))
    }
}
