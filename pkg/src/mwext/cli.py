"""Command-line interface: extract, eval, serve, lemmatize, index."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .goldstore import GoldStore
from .lexicon import Lexicon, load_lexicon
from .ngrams import build_index, dump_index
from .pipeline import (PipelineError, evaluate, load_config, read_ranked_tsv,
                       run_pipeline, write_outputs)


def _add_config_arg(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", required=True, help="key=value config file")


def cmd_extract(args: argparse.Namespace) -> int:
    cfg = load_config(args.config)
    if args.stats_scope:
        cfg.stats_scope = args.stats_scope
    result = run_pipeline(cfg)
    paths = write_outputs(result, cfg.out_dir, dump_stages=args.dump_stages)
    print(f"ranked {len(result.ranked)} candidates "
          f"({len(result.ranked.excluded)} excluded from fusion)")
    for name, path in paths.items():
        print(f"  {name}: {path}")
    return 0


def cmd_eval(args: argparse.Namespace) -> int:
    records = read_ranked_tsv(args.ranked)
    gold = GoldStore.load(args.gold)
    report = evaluate(records, gold, args.k)
    print(report.to_json())
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .server import create_app, state_from_result

    cfg = load_config(args.config)
    result = run_pipeline(cfg)
    write_outputs(result, cfg.out_dir)
    gold_path = cfg.gold_store or str(Path(cfg.out_dir) / "gold.jsonl")
    gold = GoldStore.load(gold_path)
    lexicon = load_lexicon(cfg.lexicon) if cfg.lexicon else Lexicon({})
    app = create_app(state_from_result(result, gold, lexicon))
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def cmd_lemmatize(args: argparse.Namespace) -> int:
    if args.lexicon:
        lexicon = load_lexicon(args.lexicon)
    elif args.config:
        cfg = load_config(args.config)
        if not cfg.lexicon:
            print("config has no lexicon=", file=sys.stderr)
            return 2
        lexicon = load_lexicon(cfg.lexicon)
    else:
        print("need --lexicon or --config", file=sys.stderr)
        return 2
    suggestion = lexicon.lemmatize(args.word, args.level)
    print(f"stem: {suggestion.stem}")
    for lemma in suggestion.lemmas:
        print(f"lemma: {lemma}")
    return 0


def cmd_index(args: argparse.Namespace) -> int:
    from .corpus import TagsetMap, parse_corpus

    cfg = load_config(args.config)
    tagset = TagsetMap.load(cfg.tagset) if cfg.tagset else TagsetMap()
    corpus = parse_corpus(cfg.corpus, tagset, cfg.language)
    index = build_index(corpus, cfg.max_n)
    dump_index(index, args.dump)
    print(f"indexed {index.total_tokens} tokens, dumped to {args.dump}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mwext",
                                     description="Multiword-expression extraction engine")
    sub = parser.add_subparsers(dest="command", required=True)

    p_extract = sub.add_parser("extract", help="run the extraction pipeline")
    _add_config_arg(p_extract)
    p_extract.add_argument("--dump-stages", action="store_true",
                           help="write per-stage candidate dumps")
    p_extract.add_argument("--stats-scope", choices=["candidates", "all"], default=None)
    p_extract.set_defaults(fn=cmd_extract)

    p_eval = sub.add_parser("eval", help="precision@K against a gold store")
    p_eval.add_argument("--ranked", required=True, help="ranked.tsv from extract")
    p_eval.add_argument("--gold", required=True, help="gold JSONL store")
    p_eval.add_argument("--k", type=int, default=200)
    p_eval.set_defaults(fn=cmd_eval)

    p_serve = sub.add_parser("serve", help="run the validation JSON API")
    _add_config_arg(p_serve)
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.set_defaults(fn=cmd_serve)

    p_lem = sub.add_parser("lemmatize", help="trie lemmatizer lookup")
    p_lem.add_argument("--word", required=True)
    p_lem.add_argument("--level", type=int, default=0)
    p_lem.add_argument("--lexicon", help="lexicon TSV path")
    p_lem.add_argument("--config", help="config file carrying lexicon=")
    p_lem.set_defaults(fn=cmd_lemmatize)

    p_index = sub.add_parser("index", help="build and dump the n-gram index")
    _add_config_arg(p_index)
    p_index.add_argument("--dump", required=True, help="output TSV path")
    p_index.set_defaults(fn=cmd_index)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except PipelineError as exc:
        print(str(exc), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
