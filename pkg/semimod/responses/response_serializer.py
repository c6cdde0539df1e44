import json

from semimod.helpers.encoder import CustomEncoder
from semimod.responses.output_envelope import OutputEnvelope


class ResponseSerializer:
    @staticmethod
    def to_json(envelope: OutputEnvelope) -> str:
        return json.dumps(envelope.payload, cls=CustomEncoder) + "\n"

    @staticmethod
    def to_tsv(envelope: OutputEnvelope) -> str:
        if envelope.rows is None:
            raise ValueError("This command has no tabular output")
        return envelope.rows.to_csv(sep="\t", index=False)

    @staticmethod
    def to_text(envelope: OutputEnvelope) -> str:
        if envelope.report is None:
            raise ValueError("This command has no text report")
        return envelope.report(**envelope.payload).to_string()

    @staticmethod
    def serialize(envelope: OutputEnvelope) -> str:
        """
        Format output response
        Args:
            envelope (OutputEnvelope): response built by a command

        Returns:
            str: the document to print on stdout
        """
        if envelope.format == "json":
            return ResponseSerializer.to_json(envelope)
        elif envelope.format == "tsv":
            return ResponseSerializer.to_tsv(envelope)
        else:
            return ResponseSerializer.to_text(envelope)
