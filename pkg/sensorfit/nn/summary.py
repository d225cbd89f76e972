"""Printable per-layer description of a network."""

from sensorfit.nn.models import LayerSummary, MlpModel, ModelSummary


def summarize(model: MlpModel) -> ModelSummary:
    """Describe each layer's activation, output shape and parameter count."""
    rows = tuple(
        LayerSummary(
            index=index,
            activation=layer.activation,
            output_shape=(None, layer.fan_out),
            parameter_count=layer.parameter_count,
        )
        for index, layer in enumerate(model.layers)
    )
    return ModelSummary(
        input_width=model.input_width,
        layers=rows,
        total_parameters=model.parameter_count,
    )


def format_summary(summary: ModelSummary) -> str:
    """Render a summary as an aligned text table."""
    header = f"{'Layer':<12}{'Activation':<12}{'Output Shape':<16}{'Param #':>10}"
    rule = "=" * len(header)
    lines = [f"Input width: {summary.input_width}", rule, header, rule]
    for row in summary.layers:
        shape = f"(None, {row.output_shape[1]})"
        lines.append(
            f"{'dense_' + str(row.index):<12}{row.activation.value:<12}{shape:<16}{row.parameter_count:>10,}"
        )
    lines.append(rule)
    lines.append(f"Total params: {summary.total_parameters:,}")
    return "\n".join(lines)
