//! Colorings of finite sets by `1..=k`.

use std::io::{BufRead, BufReader, Write};
use std::process::{Child, ChildStdin, ChildStdout, Command, Stdio};
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::family_core::FiniteSet;

pub trait Coloring: Send + Sync {
    fn color(&self, s: &FiniteSet) -> Result<u32>;

    /// Number of colors; every answer lies in `1..=colors()`.
    fn colors(&self) -> u32;

    /// A label that [`parse_coloring`] maps back to the same coloring, when
    /// the coloring is a built-in.
    fn label(&self) -> String;
}

impl<C: Coloring + ?Sized> Coloring for &C {
    fn color(&self, s: &FiniteSet) -> Result<u32> {
        (**self).color(s)
    }
    fn colors(&self) -> u32 {
        (**self).colors()
    }
    fn label(&self) -> String {
        (**self).label()
    }
}

impl<C: Coloring + ?Sized> Coloring for Box<C> {
    fn color(&self, s: &FiniteSet) -> Result<u32> {
        (**self).color(s)
    }
    fn colors(&self) -> u32 {
        (**self).colors()
    }
    fn label(&self) -> String {
        (**self).label()
    }
}

/// 1 when the element sum is even, 2 when odd.
#[derive(Clone, Copy, Debug, Default)]
pub struct ParitySum;

impl Coloring for ParitySum {
    fn color(&self, s: &FiniteSet) -> Result<u32> {
        let sum: u64 = s.iter().map(u64::from).sum();
        Ok(if sum % 2 == 0 { 1 } else { 2 })
    }
    fn colors(&self) -> u32 {
        2
    }
    fn label(&self) -> String {
        "parity-sum".into()
    }
}

/// 1 when `max - min > 2|s|`, else 2.
#[derive(Clone, Copy, Debug, Default)]
pub struct SpanThreshold;

impl Coloring for SpanThreshold {
    fn color(&self, s: &FiniteSet) -> Result<u32> {
        let span = match (s.min_elem(), s.max_elem()) {
            (Some(a), Some(b)) => u64::from(b - a),
            _ => 0,
        };
        Ok(if span > 2 * s.len() as u64 { 1 } else { 2 })
    }
    fn colors(&self) -> u32 {
        2
    }
    fn label(&self) -> String {
        "span-threshold".into()
    }
}

/// Pseudorandom but deterministic: a seeded hash of the elements.
#[derive(Clone, Copy, Debug)]
pub struct HashColoring {
    pub seed: u64,
    pub colors: u32,
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

impl Coloring for HashColoring {
    fn color(&self, s: &FiniteSet) -> Result<u32> {
        let mut h = splitmix(self.seed ^ s.len() as u64);
        for x in s.iter() {
            h = splitmix(h ^ u64::from(x));
        }
        Ok((h % u64::from(self.colors)) as u32 + 1)
    }
    fn colors(&self) -> u32 {
        self.colors
    }
    fn label(&self) -> String {
        format!("hash:{}:{}", self.seed, self.colors)
    }
}

/// A coloring given by a closure.
pub struct FnColoring<F> {
    label: String,
    colors: u32,
    f: F,
}

impl<F: Fn(&FiniteSet) -> u32 + Send + Sync> FnColoring<F> {
    pub fn new(label: impl Into<String>, colors: u32, f: F) -> Self {
        FnColoring { label: label.into(), colors, f }
    }
}

impl<F: Fn(&FiniteSet) -> u32 + Send + Sync> Coloring for FnColoring<F> {
    fn color(&self, s: &FiniteSet) -> Result<u32> {
        let c = (self.f)(s);
        if c == 0 || c > self.colors {
            return Err(Error::ColorOutOfRange { got: c, colors: self.colors });
        }
        Ok(c)
    }
    fn colors(&self) -> u32 {
        self.colors
    }
    fn label(&self) -> String {
        self.label.clone()
    }
}

/// A child process answering one query per line: it reads a set literal such
/// as `{2,3,4}` and writes back a color index.
pub struct ExternalColoring {
    command: String,
    colors: u32,
    io: Mutex<(Child, ChildStdin, BufReader<ChildStdout>)>,
}

impl ExternalColoring {
    pub fn spawn(command: &str, colors: u32) -> Result<Self> {
        let mut child = Command::new("sh")
            .arg("-c")
            .arg(command)
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .spawn()
            .map_err(|e| Error::External(format!("cannot start `{command}`: {e}")))?;
        let stdin = child.stdin.take().expect("piped stdin");
        let stdout = BufReader::new(child.stdout.take().expect("piped stdout"));
        Ok(ExternalColoring { command: command.to_string(), colors, io: Mutex::new((child, stdin, stdout)) })
    }
}

impl Coloring for ExternalColoring {
    fn color(&self, s: &FiniteSet) -> Result<u32> {
        let mut guard = self.io.lock().map_err(|_| Error::External("poisoned lock".into()))?;
        let (_, stdin, stdout) = &mut *guard;
        let ext = |e: std::io::Error| Error::External(e.to_string());
        writeln!(stdin, "{s}").map_err(ext)?;
        stdin.flush().map_err(ext)?;
        let mut line = String::new();
        if stdout.read_line(&mut line).map_err(ext)? == 0 {
            return Err(Error::External(format!("`{}` closed its output", self.command)));
        }
        let c: u32 = line
            .trim()
            .parse()
            .map_err(|_| Error::External(format!("bad answer `{}` for {s}", line.trim())))?;
        if c == 0 || c > self.colors {
            return Err(Error::ColorOutOfRange { got: c, colors: self.colors });
        }
        Ok(c)
    }
    fn colors(&self) -> u32 {
        self.colors
    }
    fn label(&self) -> String {
        format!("exec:{}:{}", self.colors, self.command)
    }
}

impl Drop for ExternalColoring {
    fn drop(&mut self) {
        if let Ok(mut guard) = self.io.lock() {
            let _ = guard.0.kill();
            let _ = guard.0.wait();
        }
    }
}

/// `parity-sum`, `span-threshold`, `hash` (seeded by `seed`), `hash:<seed>`,
/// `hash:<seed>:<k>`, `exec:<cmd>` (two colors), `exec:<k>:<cmd>`.
pub fn parse_coloring(spec: &str, seed: u64) -> Result<Box<dyn Coloring>> {
    let bad = || Error::ColoringSyntax(spec.to_string());
    let spec = spec.trim();
    match spec {
        "parity-sum" => return Ok(Box::new(ParitySum)),
        "span-threshold" => return Ok(Box::new(SpanThreshold)),
        "hash" | "random" => return Ok(Box::new(HashColoring { seed, colors: 2 })),
        _ => {}
    }
    if let Some(rest) = spec.strip_prefix("hash:") {
        let mut parts = rest.split(':');
        let seed = parts.next().and_then(|p| p.parse().ok()).ok_or_else(bad)?;
        let colors = match parts.next() {
            Some(p) => p.parse().ok().filter(|&k: &u32| k >= 1).ok_or_else(bad)?,
            None => 2,
        };
        if parts.next().is_some() {
            return Err(bad());
        }
        return Ok(Box::new(HashColoring { seed, colors }));
    }
    if let Some(rest) = spec.strip_prefix("exec:") {
        let (colors, cmd) = match rest.split_once(':') {
            Some((k, cmd)) if k.parse::<u32>().is_ok() => (k.parse().unwrap(), cmd),
            _ => (2, rest),
        };
        if cmd.trim().is_empty() || colors == 0 {
            return Err(bad());
        }
        return Ok(Box::new(ExternalColoring::spawn(cmd, colors)?));
    }
    Err(bad())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> FiniteSet {
        x.parse().unwrap()
    }

    #[test]
    fn builtins() {
        assert_eq!(ParitySum.color(&s("{2,4}")).unwrap(), 1);
        assert_eq!(ParitySum.color(&s("{2,3}")).unwrap(), 2);
        assert_eq!(SpanThreshold.color(&s("{1,9}")).unwrap(), 1);
        assert_eq!(SpanThreshold.color(&s("{1,5}")).unwrap(), 2);
    }

    #[test]
    fn hash_is_deterministic_and_in_range() {
        let c = HashColoring { seed: 7, colors: 3 };
        let d = parse_coloring(&c.label(), 0).unwrap();
        for mask in 0u64..256 {
            let t = FiniteSet::from_unsorted((1..=8).filter(|i| mask >> (i - 1) & 1 == 1).collect()).unwrap();
            let x = c.color(&t).unwrap();
            assert!((1..=3).contains(&x));
            assert_eq!(x, d.color(&t).unwrap());
        }
    }

    #[test]
    fn labels_round_trip() {
        for l in ["parity-sum", "span-threshold", "hash:5:2"] {
            assert_eq!(parse_coloring(l, 0).unwrap().label(), l);
        }
        assert!(parse_coloring("rainbow", 0).is_err());
        assert!(parse_coloring("hash:x", 0).is_err());
    }

    #[test]
    fn external_process() {
        // color 1 for sets whose literal contains a 2, else 2
        let c = parse_coloring("exec:while read l; do case $l in *2*) echo 1;; *) echo 2;; esac; done", 0).unwrap();
        assert_eq!(c.color(&s("{2,5}")).unwrap(), 1);
        assert_eq!(c.color(&s("{3,5}")).unwrap(), 2);
        let bad = parse_coloring("exec:while read l; do echo 9; done", 0).unwrap();
        assert!(matches!(bad.color(&s("{1}")), Err(Error::ColorOutOfRange { .. })));
    }
}
