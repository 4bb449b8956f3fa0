from .main import build_parser, compute_records, main, render, render_payload_text, run
