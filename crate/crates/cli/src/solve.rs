//! `hyperex solve`.

use hyperex_core::solve::{contains_with_witness, matching_number, ordered_copy, rainbow_matching, SemibipartiteHost};
use serde_json::json;

use crate::input::{graph_file, pattern, sizes};
use crate::{print_json, usage, Cli};

#[derive(clap::Args, Debug)]
pub struct Args {
    /// Host graph file, or a pattern name used as the host.
    pub host: String,
    /// Pattern name or file.
    pub pattern: String,
    /// `contains`, `nu`, `free:T`, `ordered` or `rainbow`.
    #[arg(long, default_value = "contains")]
    pub mode: String,
    /// The class V1 for `ordered`, as comma-separated vertices.
    #[arg(long)]
    pub v1: Option<String>,
    /// Further hosts for `rainbow`; the copies must come from distinct hosts.
    #[arg(long = "rainbow-host")]
    pub rainbow_hosts: Vec<String>,
}

pub fn run(_cli: &Cli, a: &Args) -> anyhow::Result<u8> {
    let host = pattern(&a.host)?.graph;
    let p = pattern(&a.pattern)?;
    let f = &p.graph;
    let out = match a.mode.as_str() {
        "contains" => {
            let copy = contains_with_witness(&host, f)?;
            eprintln!("{} {} {}", p.name, if copy.is_some() { "occurs in" } else { "does not occur in" }, a.host);
            json!({"mode": "contains", "pattern": p.name, "contains": copy.is_some(), "copy": copy})
        }
        "nu" => {
            let nu = matching_number(&host, f, None)?;
            eprintln!("nu = {}", nu.value);
            json!({"mode": "nu", "pattern": p.name, "nu": nu.value, "copies": nu.matching.copies})
        }
        "ordered" => {
            let part = p
                .partition
                .as_ref()
                .ok_or_else(|| usage(format!("{} is not a complete multipartite pattern", p.name)))?;
            let v1: Vec<u32> = sizes(a.v1.as_deref().ok_or_else(|| usage("ordered mode needs --v1"))?)?
                .into_iter()
                .map(|v| v as u32)
                .collect();
            let s = SemibipartiteHost::new(host, &v1)?;
            let copy = ordered_copy(&s, part)?;
            eprintln!("ordered copy {}", if copy.is_some() { "found" } else { "absent" });
            json!({"mode": "ordered", "pattern": p.name, "contains": copy.is_some(), "copy": copy})
        }
        "rainbow" => {
            let mut hosts = vec![host];
            for h in &a.rainbow_hosts {
                hosts.push(graph_file(h)?);
            }
            let found = rainbow_matching(&hosts, f)?;
            eprintln!("rainbow matching {}", if found.is_some() { "found" } else { "absent" });
            json!({"mode": "rainbow", "pattern": p.name, "hosts": hosts.len(), "found": found.is_some(), "copies": found})
        }
        m => {
            let t: usize = m
                .strip_prefix("free:")
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| usage(format!("unknown mode {m:?}; expected contains, nu, free:T, ordered or rainbow")))?;
            let nu = matching_number(&host, f, Some(t + 1))?;
            let free = nu.value <= t;
            eprintln!("{}-free: {free}", if t == 0 { p.name.clone() } else { format!("{}x{}", t + 1, p.name) });
            let copies = if free { Vec::new() } else { nu.matching.copies };
            json!({"mode": "free", "pattern": p.name, "t": t, "free": free, "copies": copies})
        }
    };
    print_json(&out)?;
    Ok(0)
}
