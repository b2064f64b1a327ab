#!/usr/bin/env python3
"""Build the bundled hand-labeled mini corpus.

Each document below lists its target-section sentences as (text, label)
pairs; label None marks filler, a category string marks a gold future-work
sentence.  The script assembles section text, verifies the sentence
splitter reproduces the hand segmentation, writes minicorpus.jsonl and
minicorpus_gold.jsonl, and reports extraction quality with the bundled
tier patterns.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from fwminer.corpus import Document, Section, load_corpus, section_sentences, select_target_section
from fwminer.extraction import RegexTiers, score_extraction
from fwminer.pipeline import ensure_domains, extract_from_documents
from fwminer.text import split_sentences

P, M, E, O = "problem", "method", "evaluation", "other"

# (doc_id, title, year, venue, citations, heading, [(sentence, label)], extra_lead_section)
DOCS = [
    # ------------------------------------------------------------- parse --
    ("parse-01", "Transition-Based Dependency Parsing with Rich Non-Local Features",
     2011, "ACL", 412, "Conclusion", [
        ("We presented a transition-based dependency parser that exploits rich non-local features.", None),
        ("Experiments on the treebank showed a significant improvement over the greedy baseline.", None),
        ("In future work, we plan to apply our parser to additional languages and annotation schemes.", P),
        ("We also intend to incorporate higher-order features into the scoring model.", M),
        ("It would be interesting to evaluate the parser on out-of-domain treebanks.", E),
     ], None),
    ("parse-02", "A Fast and Accurate Neural Constituency Parser",
     2015, "EMNLP", 233, "Conclusion and Future Work", [
        ("We described a neural constituency parser that runs in linear time.", None),
        ("Our system reached competitive accuracy while parsing thousands of sentences per second.", None),
        ("In the future, we will extend the network to capture character-level morphology.", M),
        ("We will also investigate the problem of parsing informal web text.", P),
        ("Another direction is to measure parsing quality with task-based evaluation metrics.", E),
     ], None),
    ("parse-03", "Joint Parsing and Semantic Role Labeling with Latent Variables",
     2013, "NAACL", 158, "Conclusion", [
        ("This paper introduced a joint model for parsing and semantic role labeling.", None),
        ("The latent-variable formulation removed the need for a pipeline architecture.", None),
        ("We would like to apply the joint formulation to other structured prediction tasks.", P),
        ("A promising avenue is to refine the latent representation with richer syntactic features.", M),
        ("We believe the model can also benefit low-resource settings.", None),  # intended FP
     ], None),
    ("parse-04", "Dependency Parsing for Low-Resource Languages via Annotation Projection",
     2014, "COLING", 87, "Conclusion", [
        ("We studied annotation projection for dependency parsing in low-resource settings.", None),
        ("Projected trees proved useful even with noisy word alignments.", None),
        ("In future work, we want to investigate the domain adaptation problem for projected treebanks.", P),
        ("We plan to combine projection with a small amount of gold annotation in a joint model.", M),
        ("We will evaluate on a larger set of typologically diverse datasets.", E),
     ], None),
    ("parse-05", "Unsupervised Grammar Induction for Parsing with Tree Substitution Grammars",
     2010, "ACL", 140, "Conclusions", [
        ("We proposed an unsupervised induction procedure for tree substitution grammars.", None),
        ("The induced elementary tree inventory compared favorably with hand-written grammars.", None),
        ("Our future research will explore the problem of inducing grammars for new domains such as biomedical text.", P),
        ("We also hope to integrate a morphological feature model into the sampler.", M),
     ], None),
    ("parse-06", "Parsing for Statistical Machine Translation",
     2008, "EMNLP", 199, "Conclusion", [
        ("We examined how syntactic parsing interacts with statistical machine translation quality.", None),
        ("Parser accuracy correlated with downstream translation scores across language pairs.", None),
        ("We aim to extend this study to the machine translation of morphologically rich languages.", P),
        ("We would also like to explore a probabilistic model that shares parameters between the parser and the translation system.", M),
        ("A further direction is an error analysis of parse failures on translated text.", E),
     ], None),
    ("parse-07", "Shallow Parsing with Conditional Random Fields",
     2003, "NAACL", 505, "Conclusion", [
        ("We applied conditional random fields to the shallow parsing task.", None),
        ("The sequence model outperformed the generative baseline on chunking.", None),
        ("In future work, we plan to apply the shallow parser to the opinion extraction task.", P),
        ("We intend to add long-distance features and refine the feature templates.", M),
        ("We will verify the robustness of the model with a failure analysis across corpora.", E),
     ], None),
    ("parse-08", "Graph-Based Parsing with Supervised Attachment Scores",
     2012, "CoNLL", 64, "Future Work", [
        ("We expect to improve the supervised parsing pipeline in several ways.", M),
        ("First, we will enhance the edge scorer with a richer probabilistic model.", M),
        ("Second, we would like to apply supervised parsing to the summarization domain.", P),
        ("Finally, we plan to release the source code of the parser to the community.", O),
     ], ("Introduction", "Graph-based parsers score attachments independently. We review their training regime.")),
    ("parse-09", "Self-Training for Statistical Parsers on Web Text",
     2009, "ACL", 121, "Conclusion", [
        ("We revisited self-training for a statistical parser on web text.", None),
        ("Self-training helped most when the seed treebank was small.", None),
        ("In the future, we wish to apply the self-trained statistical parser to other noisy domains.", P),
        ("We hope to extend the model with a confidence-weighted selection of auto-parsed sentences.", M),
        ("Our results suggest self-training interacts strongly with the seed size.", None),  # intended FP
     ], None),
    ("parse-10", "A Shallow Parser Cascade for Spoken Dialogue",
     2006, "COLING", 45, "Conclusion", [
        ("We presented a shallow parser cascade tailored to spoken dialogue transcripts.", None),
        ("The cascade degraded gracefully on disfluent utterances.", None),
        ("We plan to investigate the problem of parsing overlapping speech as a new task.", P),
        ("We will collect and release a larger annotated dialogue corpus for the community.", O),
        ("It would be interesting to evaluate the cascade with human judges in a dialogue system.", E),
     ], None),

    # -------------------------------------------------- machine_translation --
    ("mt-01", "Document-Level Machine Translation with Discourse Cohesion",
     2014, "ACL", 176, "Conclusion", [
        ("We studied document-level machine translation with explicit discourse cohesion constraints.", None),
        ("The cohesion-aware decoder improved pronoun translation markedly.", None),
        ("In the future, we plan to extend our model to capture both grammatical and lexical cohesion.", M),
        ("We also want to apply the approach to the summarization of translated documents.", P),
        ("We will conduct a human evaluation of discourse phenomena in the output.", E),
     ], None),
    ("mt-02", "Neural Machine Translation with Coverage Modeling",
     2016, "EMNLP", 388, "Conclusion and Future Work", [
        ("We introduced a coverage model that alleviates over-translation in neural machine translation.", None),
        ("Coverage tracking reduced repeated phrases without hurting adequacy.", None),
        ("We intend to incorporate linguistically informed coverage features into the attention network.", M),
        ("Our future work includes the translation of low-resource language pairs as a new problem setting.", P),
        ("We plan to evaluate the coverage model on additional benchmarks with more evaluation metrics.", E),
     ], None),
    ("mt-03", "Domain Adaptation for Statistical Machine Translation of Patents",
     2012, "COLING", 59, "Conclusion", [
        ("We described a domain adaptation recipe for patent machine translation.", None),
        ("Mixture weighting of translation tables gave consistent gains.", None),
        ("We plan to collect more Chinese-Japanese patent corpus as the currently available corpus size is still too small.", O),
        ("We would like to investigate the adaptation problem for further technical domains.", P),
        ("We aim to refine the mixture model with document-level domain features.", M),
     ], None),
    ("mt-04", "Phrase Reordering Models for Syntax-Based Translation",
     2010, "ACL", 98, "Conclusion", [
        ("We compared phrase reordering models under a syntax-based translation system.", None),
        ("Tree-informed reordering outperformed distance-based penalties.", None),
        ("In future work, we will extend the reordering model with a joint parsing objective.", M),
        ("We want to apply the reordering study to other language pairs such as Japanese-English.", P),
        ("A further step is an error analysis of reordering mistakes by error type.", E),
     ], None),
    ("mt-05", "Simultaneous Interpretation-Style Machine Translation",
     2015, "NAACL", 71, "Future Work", [
        ("Our future research will focus on the latency-quality trade-off in simultaneous translation.", P),
        ("We plan to enhance the segmentation policy with a learned model of source-side syntax.", M),
        ("We will evaluate the system in a live interpretation experiment with professional users.", E),
        ("The code and the collected interpretation corpus will be made available to the community.", O),
     ], ("Introduction", "Simultaneous translation must begin before a sentence ends. We outline the challenges.")),
    ("mt-06", "Minimum Error Rate Training with Smoothed Objectives",
     2007, "ACL", 260, "Conclusion", [
        ("We analyzed smoothed objectives for minimum error rate training.", None),
        ("Smoothing stabilized tuning across random restarts.", None),
        ("We intend to explore the optimization problem for other translation objectives.", P),
        ("We hope to combine the smoothed objective with a larger feature set in the tuning algorithm.", M),
        ("Our findings suggest the tuning landscape is flatter than assumed.", None),  # intended FP
     ], None),
    ("mt-07", "Character-Level Transliteration inside Machine Translation",
     2013, "EMNLP", 52, "Conclusion", [
        ("We embedded a character-level transliteration component inside a translation decoder.", None),
        ("Named entity translation improved for unseen names.", None),
        ("We plan to extend the transliteration model to additional scripts and writing systems.", M),
        ("In the future, we would like to investigate transliteration for the emotion analysis of code-switched text.", P),
        ("We will verify the gains with a larger human evaluation of entity adequacy.", E),
     ], None),
    ("mt-08", "Pivot-Based Translation for Low-Resource Pairs",
     2011, "COLING", 83, "Conclusion", [
        ("We surveyed pivot strategies for translation between low-resource language pairs.", None),
        ("Cascade and synthetic approaches traded precision against coverage differently.", None),
        ("We aim to apply pivot translation to further unseen language pairs in the future.", P),
        ("We wish to integrate the pivot selection step into a joint model of path quality.", M),
        ("There are several promising directions of future work we have yet to study.", None),  # filtered as valueless
     ], None),
    ("mt-09", "Quality Estimation for Machine Translation without References",
     2015, "ACL", 134, "Conclusion", [
        ("We built a reference-free quality estimation model for machine translation output.", None),
        ("The estimator correlated well with human adequacy judgments.", None),
        ("In future work, we plan to evaluate quality estimation on additional datasets and domains, varying in level of language complexity.", E),
        ("We intend to incorporate pseudo-reference features and refine the regression model.", M),
        ("We would like to explore quality estimation for the summarization task as a new application problem.", P),
     ], None),
    ("mt-10", "Bilingual Lexicon Induction from Comparable Corpora for MT",
     2009, "EMNLP", 115, "Conclusion", [
        ("We induced bilingual lexicons from comparable corpora to support translation systems.", None),
        ("Context and frequency signals complemented each other in the ranking.", None),
        ("We will gather and publish a cleaned bilingual lexicon set for the research community.", O),
        ("We aim at a further research direction for this task, namely lexicon induction for rare morphological variants.", P),
        ("We hope to enhance the ranking with a joint model over both signals.", M),
     ], None),

    # ---------------------------------------------------- emotion_analysis --
    ("emo-01", "Sentiment Classification of Product Reviews with Discourse Cues",
     2012, "ACL", 221, "Conclusion", [
        ("We examined discourse cues for the sentiment classification of product reviews.", None),
        ("Contrastive connectives were the strongest single cue family.", None),
        ("Also, we will apply our model to additional opinion analysis tasks such as fine-grained opinion summarization.", P),
        ("We plan to incorporate aspect-level features into the discourse model.", M),
        ("It would be interesting to evaluate the cues on conversational review dialogues.", E),
     ], None),
    ("emo-02", "Emotion Detection in Twitter Conversations",
     2014, "EMNLP", 187, "Conclusion and Future Work", [
        ("We analyzed emotion detection over threaded Twitter conversations.", None),
        ("Conversation context resolved many ambiguous emotion cues.", None),
        ("In future work, we plan to collect a larger corpus of Twitter data with hashtag supervision.", O),
        ("We intend to investigate the emotion dynamics problem across entire conversation trees.", P),
        ("We will extend the classifier with user-level features and a joint conversational model.", M),
     ], None),
    ("emo-03", "Aspect-Based Opinion Mining with Topic Models",
     2011, "NAACL", 243, "Conclusion", [
        ("We combined topic models with aspect-based opinion mining.", None),
        ("Joint inference linked aspects to opinion words more reliably than pipelines.", None),
        ("We would like to apply the model to other opinion domains such as hotels and restaurants.", P),
        ("We plan to refine the topic prior with syntactic features from a shallow parser.", M),
        ("We will evaluate the aspect assignments against human annotation at a larger scale.", E),
     ], None),
    ("emo-04", "Cross-Lingual Sentiment Analysis with Machine Translation",
     2013, "ACL", 156, "Conclusion", [
        ("We studied cross-lingual sentiment analysis through machine translation bridges.", None),
        ("Translation noise degraded polarity less than expected.", None),
        ("We aim to extend the study to emotion categories beyond polarity as a new problem.", P),
        ("We hope to integrate a noise-aware feature model for translated reviews.", M),
        ("Our analysis suggests translation direction matters for negation.", None),  # intended FP
     ], None),
    ("emo-05", "Detecting Opinion Spam with Behavioral Footprints",
     2015, "COLING", 66, "Future Work", [
        ("Our future work will attempt to develop an open-domain opinion web search engine.", O),
        ("We plan to investigate the spam evolution problem as reviewers adapt their behavior over time.", P),
        ("We intend to combine textual and behavioral features in a joint detection model.", M),
        ("We will evaluate the detector on additional review platforms and report an error analysis.", E),
     ], ("Introduction", "Opinion spam hides among genuine reviews. We summarize behavioral detection signals.")),
    ("emo-06", "Emotion Lexicon Expansion via Graph Propagation",
     2010, "EMNLP", 132, "Conclusion", [
        ("We expanded emotion lexicons with a graph propagation algorithm.", None),
        ("Propagation recovered many colloquial emotion terms.", None),
        ("In the future, we want to apply the propagation to informal Twitter data and hashtag vocabularies.", P),
        ("We will release the expanded lexicon and the source code of the propagation tool.", O),
        ("A promising next step is to weight the graph edges with a learned similarity model.", M),
     ], None),
    ("emo-07", "Stance and Sentiment in Political Debates",
     2016, "NAACL", 94, "Conclusion", [
        ("We disentangled stance from sentiment in political debate transcripts.", None),
        ("The two signals diverged on one third of the turns.", None),
        ("We plan to investigate the stance detection problem for social media threads as future work.", P),
        ("We intend to enhance the model with argumentation structure features.", M),
        ("We will verify the annotation scheme with a further agreement experiment.", E),
     ], None),
    ("emo-08", "Multimodal Emotion Analysis of Video Reviews",
     2016, "ACL", 108, "Conclusion", [
        ("We fused acoustic, visual and lexical signals for the emotion analysis of video reviews.", None),
        ("Late fusion was the most robust combination strategy.", None),
        ("In future work, we plan to extend the fusion model to streaming settings with incremental features.", M),
        ("We would like to apply the multimodal approach to the depression screening task.", P),
        ("We will evaluate on larger multimodal datasets with standard benchmark metrics.", E),
     ], None),
    ("emo-09", "Sarcasm Detection in Sentiment-Bearing Tweets",
     2015, "EMNLP", 142, "Conclusion", [
        ("We modeled sarcasm as contextual incongruity between expectation and content.", None),
        ("Incongruity features beat surface n-grams by a wide margin.", None),
        ("We hope to investigate sarcasm in the Twitter data of breaking news events, where hashtag usage differs.", P),
        ("We plan to incorporate author history into the incongruity model.", M),
        ("Sarcasm annotation remains an open issue for crowd workers.", None),  # intended FP (tier2: open issue)
     ], None),
    ("emo-10", "Sentiment Summarization of Customer Feedback",
     2009, "ACL", 77, "Conclusion", [
        ("We generated sentiment summaries from large customer feedback streams.", None),
        ("Extractive summaries aligned well with editor-written digests.", None),
        ("We want to apply the summarizer to the opinion mining of employee surveys as a new domain.", P),
        ("We plan to refine the redundancy model with aspect clustering features.", M),
        ("We will gather a public corpus of feedback summaries and release the annotation tool.", O),
     ], None),

    # ------------------------------------------------------ summarization --
    ("sum-01", "Extractive Summarization with Submodular Objectives",
     2011, "ACL", 301, "Conclusion", [
        ("We cast extractive summarization as submodular maximization.", None),
        ("A simple greedy algorithm carried a constant-factor guarantee.", None),
        ("In future work, we plan to extend the objective to capture discourse coherence.", M),
        ("We would like to apply submodular selection to the machine translation reranking task.", P),
        ("Concerning qualitative evaluation, we will try to apply evaluation metrics that capture content and coherence aspects of summaries.", E),
     ], None),
    ("sum-02", "Abstractive Summarization with Sentence Fusion",
     2015, "NAACL", 164, "Conclusion and Future Work", [
        ("We generated abstractive summaries by fusing related sentences.", None),
        ("Fusion reduced redundancy compared with pure extraction.", None),
        ("We intend to enhance the fusion grammar with semantic role constraints.", M),
        ("Our future work includes the summarization of multi-party meetings as a new problem.", P),
        ("We plan to run a user study to evaluate the fluency of fused output.", E),
     ], None),
    ("sum-03", "Query-Focused Summarization with Relevance Models",
     2008, "EMNLP", 129, "Conclusion", [
        ("We adapted relevance models to query-focused summarization.", None),
        ("Query expansion helped most for sparse topics.", None),
        ("We aim to investigate the summarization problem for interactive search sessions.", P),
        ("We hope to combine the relevance model with a redundancy-aware extraction algorithm.", M),
        ("These findings can guide practitioners choosing expansion terms.", None),
     ], None),
    ("sum-04", "Timeline Summarization of Evolving News Stories",
     2013, "ACL", 118, "Conclusion", [
        ("We produced timeline summaries for evolving news stories.", None),
        ("Date-aware salience beat static centrality on long stories.", None),
        ("In the future, we plan to apply timeline summarization to the machine translation of multilingual news feeds.", P),
        ("We will extend the salience model with entity-level burst features.", M),
        ("We intend to evaluate timelines with editors through a task-based experiment.", E),
     ], None),
    ("sum-05", "Compressive Summarization with Dependency Constraints",
     2014, "EMNLP", 97, "Future Work", [
        ("Our future research will address grammaticality guarantees for compressive summarization.", P),
        ("We plan to couple the compressor with a dependency parser in a joint model.", M),
        ("We will evaluate compression quality with crowdsourced readability judgments and an error analysis.", E),
        ("We also plan to release the compression corpus and the source code.", O),
     ], ("Introduction", "Compressive summarization deletes words under syntactic constraints. We survey the design space.")),
    ("sum-06", "Scientific Article Summarization using Citation Contexts",
     2012, "COLING", 142, "Conclusion", [
        ("We summarized scientific articles from the contexts of their incoming citations.", None),
        ("Citation contexts highlighted contributions missed by abstract-based baselines.", None),
        ("We would like to apply citation-based summarization to the survey generation task.", P),
        ("We plan to integrate the citation graph into the sentence selection model.", M),
        ("We will verify the summaries against author-written highlights on a bigger dataset.", E),
     ], None),
    ("sum-07", "Multi-Document Summarization with Graph Centrality",
     2005, "ACL", 620, "Conclusion", [
        ("We ranked sentences by graph centrality for multi-document summarization.", None),
        ("Centrality proved robust across news clusters.", None),
        ("In future work, we plan to extend the graph with cross-document coreference edges.", M),
        ("We want to investigate centrality for the opinion summarization problem.", P),
        ("A natural direction is to evaluate centrality variants on speech transcripts.", E),
     ], None),
    ("sum-08", "Sentence Compression with Integer Linear Programming",
     2007, "EMNLP", 188, "Conclusion", [
        ("We formulated sentence compression as integer linear programming.", None),
        ("Hard syntactic constraints kept outputs grammatical.", None),
        ("We aim to extend the constraint set to discourse-level phenomena in future work.", M),
        ("We would like to apply the compressor to the summary generation of meeting minutes.", P),
        ("The solver remains fast enough for interactive use.", None),
     ], None),
    ("sum-09", "Headline Generation with Statistical Translation Models",
     2004, "NAACL", 233, "Conclusion", [
        ("We treated headline generation as statistical translation from article to title.", None),
        ("Length-aware channel models produced informative headlines.", None),
        ("We plan to investigate headline generation for the emotion analysis of editorials, a new task for this model.", P),
        ("We hope to refine the channel model with syntax-based features.", M),
        ("We will evaluate the headlines with a reading-comprehension experiment.", E),
     ], None),
    ("sum-10", "Update Summarization under Novelty Constraints",
     2009, "COLING", 72, "Conclusion", [
        ("We studied update summarization where novelty against prior summaries is required.", None),
        ("Novelty filtering traded informativeness for freshness predictably.", None),
        ("In the future, we want to apply novelty constraints to the summary revision problem.", P),
        ("We plan to make the novelty toolkit available as open source software for the community.", O),
        ("It would be interesting to evaluate novelty with longitudinal user panels.", E),
     ], None),

    # ------------------------- documents without a target section ----------
    ("misc-01", "A Survey of Figurative Language Processing",
     2014, "CL", 55, None, [], ("Scope", "This survey catalogues figurative language phenomena. We review metaphor, irony and idioms.")),
    ("misc-02", "Release Notes for the Treebank Toolkit",
     2016, "LREC", 12, None, [], ("Overview", "The toolkit bundles format converters and visualization widgets. This note lists the supported formats.")),
]

# Three extra sections that exercise the valueless filter end to end: a
# tier-1 match that the filter must then discard.
VALUELESS_FILLERS = {
    "parse-04": "We see several directions of future research that we plan to pursue.",
    "mt-04": "There are many directions of future work to pursue here.",
    "sum-03": "We note numerous avenues for future work that we plan to explore eventually.",
}


def build_documents():
    docs = []
    gold = []
    for doc_id, title, year, venue, citations, heading, body, lead in DOCS:
        sections = []
        if lead is not None:
            sections.append({"heading": lead[0], "kind": "other", "text": lead[1]})
        if heading is not None:
            sentences = [t for t, _ in body]
            extra = VALUELESS_FILLERS.get(doc_id)
            if extra is not None:
                sentences.append(extra)
            text = " ".join(sentences)
            resplit = split_sentences(text)
            assert resplit == sentences, (doc_id, resplit, sentences)
            sections.append({"heading": heading, "text": text})
            target_index = len(sections) - 1
            for i, (sentence, label) in enumerate(body):
                if label is not None:
                    gold.append(
                        {
                            "doc_id": doc_id,
                            "section_index": target_index,
                            "sentence_index": i,
                            "text": sentence,
                            "category": label,
                        }
                    )
        docs.append(
            {
                "id": doc_id,
                "title": title,
                "year": year,
                "venue": venue,
                "citation_count": citations,
                "sections": sections,
            }
        )
    return docs, gold


def main() -> None:
    docs, gold = build_documents()
    data_dir = Path(__file__).resolve().parent.parent / "src" / "fwminer" / "data"
    corpus_path = data_dir / "minicorpus.jsonl"
    gold_path = data_dir / "minicorpus_gold.jsonl"
    with open(corpus_path, "w", encoding="utf-8") as fh:
        for doc in docs:
            fh.write(json.dumps(doc, sort_keys=True) + "\n")
    with open(gold_path, "w", encoding="utf-8") as fh:
        for entry in gold:
            fh.write(json.dumps(entry, sort_keys=True) + "\n")

    counts = {}
    for entry in gold:
        counts[entry["category"]] = counts.get(entry["category"], 0) + 1
    print(f"{len(docs)} documents, {len(gold)} gold sentences: {counts}")

    loaded = [ensure_domains(d) for d in load_corpus(corpus_path)]
    domain_counts = {}
    for d in loaded:
        for name in d.domains:
            domain_counts[name] = domain_counts.get(name, 0) + 1
    print("domains:", domain_counts)

    tiers = RegexTiers.bundled()
    extracted = extract_from_documents(loaded, tiers)
    predicted = {e.sentence.key for e in extracted}
    gold_keys = {(g["doc_id"], g["section_index"], g["sentence_index"]) for g in gold}
    prf = score_extraction(predicted, gold_keys)
    print(f"extraction: P={prf.precision:.3f} R={prf.recall:.3f} F={prf.f_measure:.3f}")
    missed = gold_keys - predicted
    if missed:
        print("missed gold:", sorted(missed))
    spurious = predicted - gold_keys
    if spurious:
        print(f"{len(spurious)} spurious:", sorted(spurious))
    assert prf.f_measure >= 0.88, "extraction quality regressed; adjust corpus or tiers"


if __name__ == "__main__":
    main()
