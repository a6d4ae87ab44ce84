use crate::magdm::EvaluationReport;

pub(crate) fn report_table(r: &EvaluationReport) -> String {
    let mut out = format!("q = {}, family {}, weights {}\n\n", r.q, r.family, r.weight_method);

    out.push_str("attribute weights\n");
    for (a, w) in r.attributes.iter().zip(r.weights.iter()) {
        out.push_str(&format!("  {a:<8} {w:.4}\n"));
    }

    out.push_str(&format!(
        "\n{:<8} {:<34} {:>8} {:>8} {:>8}\n",
        "alt", "aggregate", "score", "norm", "accuracy"
    ));
    for (i, alt) in r.alternatives.iter().enumerate() {
        out.push_str(&format!(
            "{:<8} {:<34} {:>8.4} {:>8.4} {:>8.4}\n",
            alt,
            r.aggregates[i].to_string(),
            r.scores[i],
            r.normalized_scores[i],
            r.accuracies[i]
        ));
    }

    out.push_str(&format!("\nranking  {}\n", r.ranking_string()));
    if let Some(s) = r.score_spread {
        out.push_str(&format!("spread   {s:.4}\n"));
    }
    out.push_str(&format!("hhi      {:.4}\n", r.hhi));

    if !r.diagnostics.is_empty() {
        out.push_str("\ndiagnostics\n");
        for d in &r.diagnostics {
            out.push_str(&format!("  {d}\n"));
        }
    }
    out
}

/// `alternative,mu_lo,mu_hi,nu_lo,nu_hi,score,normalized_score,accuracy,position`
pub(crate) fn report_csv(r: &EvaluationReport) -> Result<String, csv::Error> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(vec![]);
    w.write_record([
        "alternative",
        "mu_lo",
        "mu_hi",
        "nu_lo",
        "nu_hi",
        "score",
        "normalized_score",
        "accuracy",
        "position",
    ])?;
    let mut position = vec![0; r.alternatives.len()];
    for (p, e) in r.ranking.entries.iter().enumerate() {
        position[e.alternative] = p + 1;
    }
    for (i, alt) in r.alternatives.iter().enumerate() {
        let mut rec = vec![alt.clone()];
        rec.extend(r.aggregates[i].to_array().iter().map(f64::to_string));
        rec.extend([
            r.scores[i].to_string(),
            r.normalized_scores[i].to_string(),
            r.accuracies[i].to_string(),
            position[i].to_string(),
        ]);
        w.write_record(&rec)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
