#!/usr/bin/env python3
"""Regenerate the default knowledge-base JSON files under src/psydx/data/kb/.

The taxonomy (codes, display names, category membership) is fixed. Definitions,
manifestations, and criteria are fixture-quality clinical content: clinically
shaped, but not an authoritative diagnostic source. Every file is stamped
"content_quality": "fixture" accordingly.

Run from the repository root:  python scripts/gen_default_kb.py
"""

from __future__ import annotations

import json
from pathlib import Path

OUT_DIR = Path(__file__).resolve().parent.parent / "src" / "psydx" / "data" / "kb"

IMPAIRMENT = (
    "The symptoms result in significant distress or significant impairment in "
    "personal, family, social, educational, occupational, or other important "
    "areas of functioning."
)
EXCLUSION = (
    "The symptoms are not better accounted for by another mental disorder and "
    "are not attributable to the effects of a substance or medication or to "
    "another medical condition."
)
DEFAULT_THRESHOLD = (
    "All mandatory criteria must be met; supportive features increase "
    "diagnostic confidence but are not individually required."
)

# Disorder seed: code, name, definition, manifestations as
# (symptom, band, low_pct, high_pct), mandatory core sentences, then optional
# keys: "supportive", "threshold", "no_exclusion".


def d(code, name, definition, manifestations, core, **extra):
    return {
        "code": code,
        "name": name,
        "definition": definition,
        "manifestations": manifestations,
        "core": core,
        **extra,
    }


CATEGORIES = [
    {
        "abbreviation": "ANX",
        "name": "Anxiety or fear-related disorders",
        "definition": (
            "Disorders in this grouping share excessive fear or anxiety together with "
            "related behavioural disturbances such as avoidance, severe enough to cause "
            "significant distress or impairment in personal, family, social, educational, "
            "or occupational functioning. Fear is a response to threat perceived as "
            "imminent, while anxiety is directed at anticipated future threat. The "
            "individual disorders are distinguished chiefly by their focus of "
            "apprehension, that is, the stimulus or situation that triggers the reaction; "
            "members include generalised anxiety disorder, panic disorder, agoraphobia, "
            "specific phobia, social anxiety disorder, separation anxiety disorder, and "
            "selective mutism."
        ),
        "disorders": [
            d(
                "6B00",
                "Generalised anxiety disorder",
                "Generalised anxiety disorder features marked anxiety and worry occurring "
                "on the majority of days for at least several months, either free-floating "
                "or focused on multiple everyday domains such as family, health, finances, "
                "and school or work, accompanied by somatic tension and autonomic symptoms.",
                [
                    ("Excessive worry spanning several life domains that the person finds difficult to control", "high", 70, 90),
                    ("Restlessness or feeling keyed up and on edge", "moderate", 50, 70),
                    ("Muscle tension with aches or trembling", "moderate", 30, 50),
                    ("Sleep disturbance with difficulty falling or staying asleep", "moderate", 30, 60),
                    ("Fatigue and difficulty concentrating", "moderate", 30, 50),
                    ("Autonomic symptoms such as palpitations or dry mouth", "low", 10, 30),
                ],
                [
                    "General apprehensiveness or excessive worry about multiple everyday "
                    "events is present on most days for at least several months.",
                    "The worry is accompanied by symptoms such as muscle tension, "
                    "restlessness, autonomic overactivity, difficulty concentrating, "
                    "irritability, or sleep disturbance.",
                ],
            ),
            d(
                "6B01",
                "Panic disorder",
                "Panic disorder is characterized by recurrent unexpected panic attacks: "
                "discrete episodes of intense fear or apprehension that peak within "
                "minutes, accompanied by surging physical symptoms, followed by persistent "
                "concern about further attacks or behaviour changed to avoid them.",
                [
                    ("Recurrent unexpected panic attacks peaking within minutes", "high", 70, 90),
                    ("Palpitations, sweating, trembling, or shortness of breath during attacks", "high", 70, 90),
                    ("Persistent worry about having further attacks or their consequences", "moderate", 50, 70),
                    ("Avoidance of situations associated with previous attacks", "moderate", 30, 60),
                    ("Fear of dying or of losing control during attacks", "moderate", 30, 50),
                ],
                [
                    "Recurrent panic attacks occur that are not restricted to particular "
                    "stimuli or situations and arise unexpectedly.",
                    "The attacks are followed by persistent concern about their recurrence "
                    "or significance, or by behaviour intended to avoid them, lasting at "
                    "least several weeks.",
                ],
            ),
            d(
                "6B02",
                "Agoraphobia",
                "Agoraphobia is marked and excessive fear or anxiety occurring in, or in "
                "anticipation of, multiple situations where escape might be difficult or "
                "help unavailable, such as using public transport, being in crowds, or "
                "being outside the home alone, with active avoidance of those situations.",
                [
                    ("Fear or anxiety in crowds, queues, or enclosed public places", "high", 70, 90),
                    ("Fear of using public transportation such as buses or trains", "moderate", 50, 70),
                    ("Avoidance of leaving home alone or insistence on a companion", "moderate", 30, 60),
                    ("Fear that escape would be difficult or help unavailable if incapacitating symptoms occurred", "moderate", 30, 70),
                    ("Endurance of feared situations only with intense distress", "low", 10, 30),
                ],
                [
                    "Marked fear or anxiety arises in multiple situations where escape "
                    "might be difficult or help might not be available, such as public "
                    "transport, crowds, or being outside the home alone.",
                    "The situations are actively avoided, entered only with a companion, "
                    "or endured with intense fear, consistently over an extended period.",
                ],
            ),
            d(
                "6B03",
                "Specific phobia",
                "Specific phobia involves marked and excessive fear or anxiety that "
                "consistently occurs on exposure or anticipated exposure to one or more "
                "particular objects or situations, such as animals, heights, blood, or "
                "flying, out of proportion to the actual danger they pose.",
                [
                    ("Immediate intense fear on exposure to the specific object or situation", "high", 70, 90),
                    ("Active avoidance of the feared object or situation", "high", 70, 90),
                    ("Anticipatory anxiety before likely exposure", "moderate", 30, 70),
                    ("Physiological arousal such as palpitations, sweating, or faintness on exposure", "moderate", 30, 50),
                ],
                [
                    "Marked and excessive fear or anxiety consistently occurs upon "
                    "exposure, or anticipated exposure, to one or more specific objects or "
                    "situations and is out of proportion to the actual danger.",
                    "The feared objects or situations are avoided or endured with intense "
                    "distress, with the pattern persisting for at least several months.",
                ],
            ),
            d(
                "6B04",
                "Social anxiety disorder",
                "Social anxiety disorder is marked fear or anxiety in social situations "
                "in which the individual may be scrutinized by others, such as "
                "conversations, being observed eating, or performing, driven by concern "
                "about acting in a way, or showing anxiety symptoms, that will be "
                "negatively evaluated.",
                [
                    ("Fear of negative evaluation, embarrassment, or humiliation in social situations", "high", 70, 90),
                    ("Avoidance of performance situations such as public speaking", "moderate", 50, 70),
                    ("Blushing, trembling, sweating, or nausea when observed", "moderate", 30, 50),
                    ("Fear that visible anxiety symptoms will themselves be judged", "moderate", 30, 60),
                    ("Restricted social life and impaired occupational functioning", "moderate", 30, 70),
                ],
                [
                    "Marked fear or anxiety consistently arises in one or more social "
                    "situations involving possible scrutiny, such as social interactions, "
                    "being observed, or performing in front of others.",
                    "The individual fears behaving, or showing anxiety symptoms, in a way "
                    "that will be negatively evaluated, and the situations are avoided or "
                    "endured with intense distress.",
                ],
            ),
            d(
                "6B05",
                "Separation anxiety disorder",
                "Separation anxiety disorder involves marked fear or anxiety about "
                "separation from specific attachment figures that clearly exceeds what is "
                "expected for the person's developmental level, persisting for at least "
                "several months and producing avoidance or severe distress around "
                "separations.",
                [
                    ("Excessive distress on actual or anticipated separation from attachment figures", "high", 70, 90),
                    ("Persistent worry about harm befalling attachment figures", "high", 70, 90),
                    ("Reluctance or refusal to sleep away from attachment figures", "moderate", 30, 70),
                    ("School refusal or reluctance to leave home", "moderate", 30, 50),
                    ("Physical complaints such as headache or nausea around separations", "moderate", 30, 50),
                    ("Repeated nightmares with separation themes", "low", 10, 30),
                ],
                [
                    "Marked and persistent fear or anxiety about separation from "
                    "particular attachment figures exceeds what is developmentally "
                    "expected.",
                    "The fear has lasted at least several months and is manifest in worry "
                    "about losing the figures, reluctance to be separated from them, or "
                    "somatic distress around separations.",
                ],
            ),
            d(
                "6B06",
                "Selective mutism",
                "Selective mutism is a consistent failure to speak in specific social "
                "situations where there is an expectation of speaking, typically at "
                "school, despite fluent speech in other settings such as home, lasting at "
                "least one month and interfering with education or social communication.",
                [
                    ("Consistent silence in selected social settings such as school", "high", 70, 90),
                    ("Fluent speech in familiar settings such as home", "high", 70, 90),
                    ("Interference with educational achievement or social communication", "moderate", 50, 70),
                    ("Use of gesture or whispering as a substitute for speech", "moderate", 30, 50),
                    ("Marked social anxiety accompanying the silence", "moderate", 30, 70),
                ],
                [
                    "There is consistent selectivity in speaking: adequate language "
                    "competence in some social situations, typically at home, but "
                    "persistent failure to speak in others, typically at school.",
                    "The disturbance has lasted at least one month, not limited to the "
                    "first month of school, and interferes with educational achievement or "
                    "social communication.",
                ],
            ),
        ],
    },
    {
        "abbreviation": "CATA",
        "name": "Catatonia",
        "definition": (
            "Catatonia is a syndrome of marked psychomotor disturbance arising in "
            "association with another mental disorder, a medical condition, or exposure "
            "to substances or medications. It involves combinations of reduced, "
            "excessive, or abnormal psychomotor activity, including stupor, rigidity, "
            "waxy flexibility, mutism, negativism, posturing, stereotypies, echolalia, "
            "and echopraxia."
        ),
        "disorders": [
            d(
                "6A40",
                "Catatonia associated with another mental disorder",
                "A catatonic syndrome of stupor, catalepsy, waxy flexibility, mutism, "
                "negativism, posturing, or related psychomotor disturbance occurring in "
                "the context of another mental disorder such as schizophrenia, bipolar "
                "disorder, or a depressive disorder.",
                [
                    ("Stupor with markedly reduced responsiveness to the environment", "high", 70, 90),
                    ("Mutism with little or no verbal response", "moderate", 50, 70),
                    ("Posturing, catalepsy, or waxy flexibility on examination", "moderate", 30, 60),
                    ("Negativism with resistance to instructions or to being moved", "moderate", 30, 50),
                    ("Echolalia or echopraxia", "low", 10, 30),
                ],
                [
                    "Several psychomotor disturbances such as stupor, catalepsy, waxy "
                    "flexibility, mutism, negativism, posturing, mannerisms, stereotypies, "
                    "agitation, grimacing, echolalia, or echopraxia are present "
                    "concurrently.",
                    "The syndrome occurs in the context of another established mental "
                    "disorder such as schizophrenia, a mood disorder, or a "
                    "neurodevelopmental disorder.",
                ],
                no_exclusion=True,
            ),
            d(
                "6A41",
                "Catatonia induced by substances or medications",
                "A catatonic syndrome that develops during or soon after intoxication "
                "with or withdrawal from a psychoactive substance, or following use of a "
                "medication such as an antipsychotic, where the psychomotor disturbance "
                "is attributable to the substance exposure.",
                [
                    ("Psychomotor disturbance with a close temporal link to substance or medication exposure", "high", 70, 90),
                    ("Stupor or excitement emerging during intoxication, withdrawal, or after a medication change", "moderate", 50, 70),
                    ("Rigidity or posturing on examination", "moderate", 30, 60),
                    ("Improvement as the implicated substance is reduced or withdrawn", "moderate", 30, 50),
                ],
                [
                    "A catatonic syndrome with features such as stupor, mutism, posturing, "
                    "or negativism develops during or soon after exposure to a "
                    "psychoactive substance or medication.",
                    "The temporal relationship and clinical course indicate the substance "
                    "or medication, rather than another mental disorder, as the cause.",
                ],
                no_exclusion=True,
            ),
        ],
    },
    {
        "abbreviation": "SUD",
        "name": "Disorders due to substance use or addictive behaviors",
        "definition": (
            "This grouping comprises disorders that result from single or repeated use "
            "of psychoactive substances, together with addictive behaviours involving "
            "gambling or gaming. Core features include impaired control over the "
            "substance or behaviour, increasing priority given to it over other "
            "activities and obligations, craving, neuroadaptive changes such as "
            "tolerance and withdrawal, and continuation despite harm to health and "
            "functioning."
        ),
        "disorders": [
            d(
                "6C40",
                "Disorders due to use of alcohol",
                "Disorders arising from the use of alcohol, spanning hazardous patterns "
                "of drinking, harmful use, and alcohol dependence with impaired control, "
                "craving, tolerance, and withdrawal.",
                [
                    ("Impaired control over the onset, amount, or circumstances of drinking", "high", 70, 90),
                    ("Continued drinking despite physical, mental, or social harm", "high", 70, 90),
                    ("Strong craving or urge to drink alcohol", "moderate", 50, 70),
                    ("Tolerance requiring increasing amounts for the same effect", "moderate", 30, 70),
                    ("Withdrawal features such as tremor, sweating, or morning relief drinking", "moderate", 30, 50),
                ],
                [
                    "A pattern of alcohol use shows impaired control over use, increasing "
                    "priority of drinking over other activities, or physiological features "
                    "such as tolerance or withdrawal.",
                    "The pattern is evident over at least several months or recurs "
                    "repeatedly, causing significant distress, impairment, or clinically "
                    "significant harm to the individual or others.",
                ],
                no_exclusion=True,
            ),
            d(
                "6C41",
                "Disorders due to use of cannabis",
                "Disorders arising from the use of cannabis, including harmful patterns "
                "of use and cannabis dependence with impaired control and increasing "
                "priority of use over other activities.",
                [
                    ("Impaired control over cannabis use despite intentions to cut down", "high", 70, 90),
                    ("Craving for cannabis", "moderate", 50, 70),
                    ("Reduced engagement in school, work, or social activities in favour of use", "moderate", 30, 70),
                    ("Tolerance with escalating amounts or potency", "moderate", 30, 50),
                    ("Irritability, insomnia, or appetite change on stopping", "low", 10, 30),
                ],
                [
                    "A pattern of cannabis use shows impaired control, increasing priority "
                    "over other activities, or neuroadaptation such as tolerance or "
                    "withdrawal.",
                    "The pattern persists over months or recurs repeatedly and produces "
                    "significant distress, impairment, or harm.",
                ],
                no_exclusion=True,
            ),
            d(
                "6C44",
                "Disorders due to use of sedatives, hypnotics or anxiolytics",
                "Disorders arising from the use of sedative, hypnotic, or anxiolytic "
                "substances, typically benzodiazepines or related medicines, including "
                "escalation beyond prescribed use and dependence.",
                [
                    ("Escalation of sedative dose beyond the prescribed or intended amount", "high", 70, 90),
                    ("Impaired control over use with unsuccessful attempts to reduce", "moderate", 50, 70),
                    ("Rebound insomnia or anxiety between doses", "moderate", 30, 70),
                    ("Daytime sedation, unsteadiness, or memory lapses", "moderate", 30, 50),
                    ("Agitation, tremor, or seizures on abrupt cessation", "low", 10, 30),
                ],
                [
                    "A pattern of sedative, hypnotic, or anxiolytic use shows impaired "
                    "control, escalation beyond the intended dose, or neuroadaptation such "
                    "as tolerance or a withdrawal syndrome on cessation.",
                    "The pattern persists or recurs and causes significant distress, "
                    "impairment, or harm.",
                ],
                no_exclusion=True,
            ),
            d(
                "6C46",
                "Disorders due to use of stimulants including amphetamines, methamphetamine or methcathinone",
                "Disorders arising from the use of amphetamine-type stimulants, "
                "including harmful patterns of use and stimulant dependence with binge "
                "use and post-use crash phenomena.",
                [
                    ("Episodic binge patterns of stimulant use", "high", 70, 90),
                    ("Intense craving for the stimulant", "moderate", 50, 70),
                    ("Tolerance with escalating doses", "moderate", 30, 70),
                    ("Post-use crash with hypersomnia and low mood", "moderate", 30, 50),
                    ("Suspiciousness or paranoid ideation during intoxication", "low", 10, 30),
                ],
                [
                    "A pattern of stimulant use shows impaired control, increasing "
                    "priority of use over other activities, or neuroadaptation such as "
                    "tolerance or a characteristic crash on cessation.",
                    "The pattern persists or recurs and causes significant distress, "
                    "impairment, or harm.",
                ],
                no_exclusion=True,
            ),
            d(
                "6C47",
                "Disorders due to use of synthetic cathinones",
                "Disorders arising from the use of synthetic cathinone stimulants, with "
                "prolonged binges, sleeplessness, and autonomic arousal during "
                "intoxication.",
                [
                    ("Recurrent use of synthetic cathinone products with impaired control", "high", 70, 90),
                    ("Prolonged binges with sleeplessness and agitation", "moderate", 50, 70),
                    ("Craving between episodes of use", "moderate", 30, 70),
                    ("Palpitations and raised blood pressure during intoxication", "moderate", 30, 50),
                    ("Transient psychotic symptoms during heavy use", "low", 10, 30),
                ],
                [
                    "A pattern of synthetic cathinone use shows impaired control, "
                    "increasing priority of use, or neuroadaptive features such as "
                    "tolerance.",
                    "The pattern persists or recurs and causes significant distress, "
                    "impairment, or harm.",
                ],
                no_exclusion=True,
            ),
            d(
                "6C49",
                "Disorders due to use of hallucinogens",
                "Disorders arising from the use of hallucinogens such as lysergide or "
                "psilocybin, characterized by impaired control over use and hazard "
                "during perceptually distorted intoxication states.",
                [
                    ("Recurrent hallucinogen use with impaired control", "high", 70, 90),
                    ("Marked perceptual distortions during intoxication", "high", 70, 90),
                    ("Hazardous behaviour while intoxicated", "moderate", 30, 70),
                    ("Continued use despite distressing experiences during intoxication", "moderate", 30, 50),
                ],
                [
                    "A pattern of hallucinogen use shows impaired control or increasing "
                    "priority of use over other activities and obligations.",
                    "The pattern persists or recurs and causes significant distress, "
                    "impairment, or harm, including hazard during intoxication.",
                ],
                no_exclusion=True,
            ),
            d(
                "6C4D",
                "Disorders due to use of dissociative drugs including ketamine and phencyclidine [PCP]",
                "Disorders arising from the use of dissociative drugs such as ketamine "
                "or phencyclidine, with detachment, analgesia, and incoordination during "
                "intoxication and impaired control over recurrent use.",
                [
                    ("Recurrent use of dissociative drugs with impaired control", "high", 70, 90),
                    ("Detachment, derealization, and analgesia during intoxication", "moderate", 50, 70),
                    ("Nystagmus and incoordination during intoxication", "moderate", 30, 50),
                    ("Agitated or confused behaviour while intoxicated", "moderate", 30, 60),
                    ("Urinary tract symptoms with sustained ketamine use", "low", 10, 30),
                ],
                [
                    "A pattern of dissociative drug use shows impaired control, "
                    "increasing priority of use, or continuation despite harm.",
                    "The pattern persists or recurs and causes significant distress, "
                    "impairment, or harm.",
                ],
                no_exclusion=True,
            ),
            d(
                "6C4E",
                "Disorders due to use of other specified psychoactive substances, including medications",
                "Disorders arising from a problematic pattern of use of a psychoactive "
                "substance, including a medication, that is not covered by the more "
                "specific substance categories.",
                [
                    ("Problematic pattern of use of a psychoactive substance not covered by more specific categories", "high", 70, 90),
                    ("Impaired control over use of the substance", "moderate", 50, 70),
                    ("Tolerance or withdrawal features", "moderate", 30, 70),
                    ("Continued use despite harm", "moderate", 30, 50),
                ],
                [
                    "A pattern of use of a specified psychoactive substance outside the "
                    "named categories shows impaired control, increasing priority of use, "
                    "or neuroadaptation.",
                    "The pattern persists or recurs and causes significant distress, "
                    "impairment, or harm.",
                ],
                no_exclusion=True,
            ),
            d(
                "6C4F",
                "Disorders due to use of multiple specified psychoactive substances, including medications",
                "Disorders arising from concurrent or alternating problematic use of "
                "several specified psychoactive substances, where no single substance "
                "accounts for the presentation.",
                [
                    ("Concurrent problematic use of several specified psychoactive substances", "high", 70, 90),
                    ("Impaired control across more than one substance", "moderate", 50, 70),
                    ("Substitution between substances depending on availability", "moderate", 30, 70),
                    ("Cumulative harm from combined use", "moderate", 30, 50),
                ],
                [
                    "A pattern of use involving multiple specified psychoactive "
                    "substances shows impaired control or increasing priority of use, "
                    "with no single substance accounting for the presentation.",
                    "The pattern persists or recurs and causes significant distress, "
                    "impairment, or harm.",
                ],
                no_exclusion=True,
            ),
            d(
                "6C4G",
                "Disorders due to use of unknown or unspecified psychoactive substances",
                "Disorders arising from use of a psychoactive substance whose identity "
                "cannot be established, with intoxication, withdrawal, or a harmful "
                "pattern of use of uncertain origin.",
                [
                    ("Substance-related disturbance where the substance cannot be identified", "high", 70, 90),
                    ("Intoxication or withdrawal features of uncertain origin", "moderate", 50, 70),
                    ("Impaired control over use of the unidentified substance", "moderate", 30, 70),
                ],
                [
                    "A substance-related clinical syndrome such as intoxication, "
                    "withdrawal, or a harmful pattern of use is present, but the identity "
                    "of the substance cannot be established.",
                    "The disturbance causes significant distress, impairment, or harm.",
                ],
                no_exclusion=True,
            ),
            d(
                "6C50",
                "Gambling disorder",
                "Gambling disorder is a persistent pattern of gambling behaviour, online "
                "or offline, with impaired control over gambling, increasing priority of "
                "gambling over other interests, and continuation or escalation despite "
                "negative consequences.",
                [
                    ("Impaired control over the onset, frequency, intensity, and duration of gambling", "high", 70, 90),
                    ("Increasing priority of gambling over other interests and daily activities", "high", 70, 90),
                    ("Continuation or escalation of gambling despite mounting losses and conflict", "moderate", 50, 70),
                    ("Chasing losses with further gambling", "moderate", 30, 70),
                    ("Concealment of gambling and borrowing to fund it", "moderate", 30, 50),
                ],
                [
                    "A persistent pattern of gambling behaviour shows impaired control "
                    "over gambling, increasing priority given to gambling over other "
                    "activities, and continuation or escalation despite negative "
                    "consequences.",
                    "The pattern is evident over an extended period, typically twelve "
                    "months or more, and causes significant distress or impairment.",
                ],
                no_exclusion=True,
            ),
            d(
                "6C51",
                "Gaming disorder",
                "Gaming disorder is a persistent pattern of digital or video gaming with "
                "impaired control over gaming, increasing priority of gaming over other "
                "interests and daily activities, and continuation or escalation despite "
                "negative consequences.",
                [
                    ("Impaired control over the onset, frequency, intensity, and duration of gaming", "high", 70, 90),
                    ("Gaming taking precedence over other interests and daily activities", "high", 70, 90),
                    ("Continuation or escalation of gaming despite negative consequences in school or work", "moderate", 50, 70),
                    ("Irritability or restlessness when gaming is interrupted", "moderate", 30, 70),
                    ("Neglect of sleep, meals, or hygiene during extended sessions", "moderate", 30, 50),
                ],
                [
                    "A persistent pattern of gaming behaviour shows impaired control over "
                    "gaming, increasing priority given to gaming over other activities, "
                    "and continuation or escalation despite negative consequences.",
                    "The pattern is evident over an extended period, typically twelve "
                    "months or more, and causes significant distress or impairment.",
                ],
                no_exclusion=True,
            ),
        ],
    },
    {
        "abbreviation": "BOD",
        "name": "Disorders of bodily distress or bodily experience",
        "definition": (
            "This grouping comprises conditions centred on distressing bodily symptoms "
            "and disturbed experience of the body. The defining feature is excessive "
            "attention directed toward bodily symptoms such as pain, fatigue, or "
            "digestive complaints, with repeated health-care contacts, where the "
            "distress and preoccupation are not alleviated by appropriate examination "
            "and reassurance, whether or not a medical explanation for the symptoms "
            "exists."
        ),
        "disorders": [
            d(
                "6C20",
                "Bodily distress disorder",
                "Bodily distress disorder is characterized by bodily symptoms that the "
                "individual finds distressing and to which excessive attention is "
                "directed, manifest in repeated medical contacts, where appropriate "
                "examination and reassurance do not alleviate the concern.",
                [
                    ("Persistent bodily symptoms such as pain or fatigue that the person finds distressing", "high", 70, 90),
                    ("Excessive attention directed to the symptoms, including repeated medical contacts", "high", 70, 90),
                    ("Concern not alleviated by appropriate clinical examination and reassurance", "moderate", 50, 70),
                    ("Symptoms that shift in site and quality over time", "moderate", 30, 50),
                    ("Functional impairment from symptom preoccupation", "moderate", 30, 70),
                ],
                [
                    "Bodily symptoms that are distressing to the individual are present "
                    "on most days for at least several months, with excessive attention "
                    "directed toward them.",
                    "The excessive attention is not alleviated by appropriate clinical "
                    "examination, investigations, and reassurance.",
                ],
            ),
        ],
    },
    {
        "abbreviation": "STRESS",
        "name": "Disorders specifically associated with stress",
        "definition": (
            "Disorders in this grouping arise specifically in association with exposure "
            "to a stressful or traumatic event or series of events; the stressor is a "
            "necessary, though not sufficient, causal factor. The individual disorders "
            "are distinguished by the nature of the stressor and by the pattern, "
            "duration, and severity of the symptomatic response, which always causes "
            "significant distress or functional impairment."
        ),
        "disorders": [
            d(
                "6B40",
                "Post traumatic stress disorder",
                "Post traumatic stress disorder may develop after exposure to an "
                "extremely threatening or horrific event or series of events, and is "
                "marked by re-experiencing the event in the present, deliberate "
                "avoidance of reminders, and a persistent perception of heightened "
                "current threat, lasting at least several weeks.",
                [
                    ("Re-experiencing the traumatic event in vivid intrusive memories, flashbacks, or nightmares", "high", 70, 90),
                    ("Deliberate avoidance of thoughts, activities, or situations reminiscent of the event", "high", 70, 90),
                    ("Persistent sense of heightened current threat with hypervigilance or enhanced startle", "moderate", 50, 70),
                    ("Sleep disturbance", "moderate", 30, 70),
                    ("Emotional numbing or detachment", "moderate", 30, 50),
                ],
                [
                    "Exposure to an extremely threatening or horrific event or series of "
                    "events has occurred.",
                    "The event is re-experienced in the present, reminders are "
                    "deliberately avoided, and a persistent perception of heightened "
                    "current threat is present, with the syndrome lasting at least "
                    "several weeks.",
                ],
            ),
            d(
                "6B41",
                "Complex post traumatic stress disorder",
                "Complex post traumatic stress disorder may develop after prolonged or "
                "repeated events from which escape was difficult or impossible, and "
                "comprises the core re-experiencing, avoidance, and threat symptoms "
                "together with severe problems in affect regulation, persistent beliefs "
                "about oneself as diminished or worthless, and persistent difficulty in "
                "sustaining relationships.",
                [
                    ("Re-experiencing of the traumatic events with avoidance of reminders and heightened threat perception", "high", 70, 90),
                    ("Severe and pervasive problems in affect regulation", "moderate", 50, 70),
                    ("Persistent beliefs about oneself as diminished, defeated, or worthless, with shame or guilt", "moderate", 50, 70),
                    ("Persistent difficulty sustaining relationships and feeling close to others", "moderate", 30, 70),
                    ("History of prolonged or repeated inescapable exposure such as captivity or abuse", "moderate", 30, 60),
                ],
                [
                    "Exposure to an extremely threatening or horrific event or series of "
                    "events, most commonly prolonged or repeated events from which escape "
                    "was difficult or impossible, has occurred, and the core "
                    "re-experiencing, avoidance, and heightened-threat requirements are "
                    "met.",
                    "In addition there are severe problems in affect regulation, "
                    "persistent negative beliefs about oneself, and persistent "
                    "difficulties in sustaining relationships.",
                ],
            ),
            d(
                "6B42",
                "Prolonged grief disorder",
                "Prolonged grief disorder is a persistent and pervasive grief response "
                "following the death of someone close, characterized by longing for or "
                "preoccupation with the deceased accompanied by intense emotional pain, "
                "lasting atypically long after the loss, clearly beyond six months.",
                [
                    ("Persistent pervasive longing or yearning for the deceased", "high", 70, 90),
                    ("Preoccupation with the deceased or the circumstances of the death", "high", 70, 90),
                    ("Intense emotional pain such as sadness, guilt, anger, or difficulty accepting the death", "moderate", 50, 70),
                    ("Difficulty engaging with social or other activities since the loss", "moderate", 30, 70),
                    ("Feeling that part of oneself has been lost", "moderate", 30, 50),
                ],
                [
                    "Following the death of a person close to the bereaved, a persistent "
                    "and pervasive grief response with longing for, or preoccupation "
                    "with, the deceased is accompanied by intense emotional pain.",
                    "The response has persisted for an atypically long period, clearly "
                    "more than six months after the loss, exceeding expected social or "
                    "cultural norms.",
                ],
            ),
            d(
                "6B43",
                "Adjustment disorder",
                "Adjustment disorder is a maladaptive reaction to an identifiable "
                "psychosocial stressor or multiple stressors, usually emerging within a "
                "month of the stressor, characterized by preoccupation with the stressor "
                "and failure to adapt, and usually resolving within six months unless "
                "the stressor persists.",
                [
                    ("Preoccupation with an identifiable psychosocial stressor or its consequences", "high", 70, 90),
                    ("Excessive worry and recurrent distressing thoughts about the stressor", "moderate", 50, 70),
                    ("Failure to adapt to the stressor with impairment in daily functioning", "moderate", 50, 70),
                    ("Symptoms emerging within about one month of the stressor", "moderate", 30, 70),
                    ("Resolution expected within about six months unless the stressor persists", "moderate", 30, 50),
                ],
                [
                    "A maladaptive reaction to an identifiable psychosocial stressor or "
                    "multiple stressors has emerged, usually within one month of the "
                    "stressor.",
                    "The reaction is characterized by preoccupation with the stressor or "
                    "its implications and by failure to adapt.",
                ],
            ),
        ],
    },
    {
        "abbreviation": "DISR",
        "name": "Disruptive behavior or dissocial disorders",
        "definition": (
            "This grouping covers persistent patterns of defiant, disobedient, "
            "provocative, or dissocial behaviour that substantially exceed "
            "age-appropriate social expectations and violate the rights of others or "
            "major societal norms, going well beyond ordinary childhood mischief or "
            "adolescent rebelliousness. Problems of impulse control over strong urges "
            "that harm the individual or others fall in this territory."
        ),
        "disorders": [
            d(
                "6C90",
                "Oppositional defiant disorder",
                "Oppositional defiant disorder is a persistent pattern, lasting at least "
                "six months, of markedly defiant, disobedient, provocative, or spiteful "
                "behaviour, or prevailing angry and irritable mood, beyond what is "
                "typical for age and developmental level.",
                [
                    ("Markedly defiant, disobedient, or provocative behaviour toward authority figures", "high", 70, 90),
                    ("Argumentativeness and active refusal to comply with rules and requests", "high", 70, 90),
                    ("Frequent temper outbursts or prevailing angry and irritable mood", "moderate", 50, 70),
                    ("Blaming others for one's own mistakes", "moderate", 30, 50),
                    ("Spiteful or vindictive acts", "low", 10, 30),
                ],
                [
                    "A persistent pattern of markedly defiant, disobedient, provocative, "
                    "or spiteful behaviour, or prevailing angry or irritable mood, has "
                    "lasted at least six months.",
                    "The behaviour exceeds what is typical for age and developmental "
                    "level and is not confined to interactions with siblings.",
                ],
            ),
            d(
                "6C91",
                "Conduct-dissocial disorder",
                "Conduct-dissocial disorder is a repetitive and persistent pattern of "
                "behaviour, evident for twelve months or more, in which the basic rights "
                "of others or major age-appropriate societal norms, rules, or laws are "
                "violated.",
                [
                    ("Repeated behaviour violating the basic rights of others or major age-appropriate societal norms", "high", 70, 90),
                    ("Aggression toward people or animals", "moderate", 50, 70),
                    ("Deceitfulness or theft", "moderate", 30, 70),
                    ("Destruction of property or fire-setting", "moderate", 30, 60),
                    ("Serious rule violations such as truancy or running away from home", "moderate", 30, 50),
                ],
                [
                    "A repetitive and persistent pattern of behaviour violates either the "
                    "basic rights of others or major age-appropriate societal norms, "
                    "rules, or laws.",
                    "The pattern has been evident for twelve months or more and appears "
                    "across multiple settings.",
                ],
            ),
        ],
    },
    {
        "abbreviation": "DISS",
        "name": "Dissociative disorders",
        "definition": (
            "Dissociative disorders involve involuntary disruption or discontinuity in "
            "the normal integration of identity, sensations, perceptions, affects, "
            "thoughts, memories, control over bodily movements, or behaviour. The "
            "disruption is not attributable to the direct effects of a substance, "
            "another medical condition, or a sanctioned cultural or religious practice, "
            "and presentations range from amnesia and trance states to disrupted "
            "identity and experiences of unreality."
        ),
        "disorders": [
            d(
                "6B60",
                "Dissociative neurological symptom disorder",
                "Dissociative neurological symptom disorder presents with motor, "
                "sensory, or cognitive symptoms, such as weakness, non-epileptic "
                "seizures, or sensory loss, that imply an involuntary discontinuity in "
                "normal functioning and are not consistent with a recognized disease of "
                "the nervous system.",
                [
                    ("Motor symptoms such as weakness, paralysis, or gait disturbance without corresponding disease", "high", 70, 90),
                    ("Non-epileptic seizure-like episodes", "moderate", 50, 70),
                    ("Sensory loss or alteration inconsistent with neurological patterns", "moderate", 30, 70),
                    ("Findings internally inconsistent on examination", "moderate", 30, 50),
                    ("Symptom onset or worsening around psychological stressors", "moderate", 30, 60),
                ],
                [
                    "Motor, sensory, or cognitive symptoms are present that imply an "
                    "involuntary discontinuity in the normal integration of functioning.",
                    "Clinical findings are not consistent with a recognized disease of "
                    "the nervous system or another health condition.",
                ],
            ),
            d(
                "6B61",
                "Dissociative amnesia",
                "Dissociative amnesia is an inability to recall important "
                "autobiographical memories, typically of recent traumatic or stressful "
                "events, that is inconsistent with ordinary forgetting.",
                [
                    ("Inability to recall important autobiographical memories, typically of recent traumatic events", "high", 70, 90),
                    ("Memory gaps clearly exceeding ordinary forgetting", "high", 70, 90),
                    ("Amnesia for a circumscribed period or event", "moderate", 50, 70),
                    ("Preserved general knowledge and procedural abilities", "moderate", 30, 70),
                    ("Sudden travel with confusion about identity in rare presentations", "low", 10, 30),
                ],
                [
                    "There is an inability to recall important autobiographical memories, "
                    "typically of recent traumatic or stressful events, that is "
                    "inconsistent with ordinary forgetting.",
                    "The amnesia does not occur exclusively during another dissociative "
                    "disorder and is not attributable to a substance or to a disease of "
                    "the nervous system.",
                ],
            ),
            d(
                "6B62",
                "Trance disorder",
                "Trance disorder involves involuntary trance states in which there is a "
                "marked narrowing of awareness of immediate surroundings and restriction "
                "of movements, postures, and speech to a small repetitive repertoire, "
                "not accepted as part of a collective cultural or religious practice.",
                [
                    ("Involuntary trance states with marked narrowing of awareness of surroundings", "high", 70, 90),
                    ("Restriction of movements, postures, and speech to a small repetitive repertoire", "moderate", 50, 70),
                    ("Recurrent or persistent episodes causing distress or impairment", "moderate", 30, 70),
                    ("Episodes not accepted as part of a collective cultural or religious practice", "moderate", 30, 50),
                ],
                [
                    "Trance states occur in which there is a marked involuntary narrowing "
                    "of awareness of immediate surroundings, with restriction of "
                    "movements, postures, and speech.",
                    "The states are recurrent or prolonged, are not accepted as part of "
                    "a collective cultural or religious practice, and cause distress or "
                    "impairment.",
                ],
            ),
            d(
                "6B63",
                "Possession trance disorder",
                "Possession trance disorder involves trance states in which the "
                "customary sense of personal identity is replaced by an external "
                "possessing identity, with behaviours experienced as controlled by the "
                "possessing agent, outside sanctioned cultural or religious practice.",
                [
                    ("Trance states in which the customary sense of identity is replaced by an external possessing identity", "high", 70, 90),
                    ("Behaviours or movements experienced as controlled by the possessing agent", "moderate", 50, 70),
                    ("Recurrent or prolonged episodes with distress or impairment", "moderate", 30, 70),
                    ("Episodes not sanctioned by the person's culture or religion", "moderate", 30, 50),
                ],
                [
                    "Trance states occur in which the customary sense of personal "
                    "identity is replaced by an external possessing identity and "
                    "behaviour is experienced as controlled by that agent.",
                    "The states are recurrent or prolonged, are not accepted as part of "
                    "a collective cultural or religious practice, and cause distress or "
                    "impairment.",
                ],
            ),
            d(
                "6B64",
                "Dissociative identity disorder",
                "Dissociative identity disorder is characterized by disruption of "
                "identity in which there are two or more distinct personality states "
                "with marked discontinuities in the sense of self and agency, each with "
                "its own pattern of experiencing and relating.",
                [
                    ("Two or more distinct personality states with marked discontinuities in sense of self and agency", "high", 70, 90),
                    ("Alterations in affect, behaviour, memory, and perception across states", "moderate", 50, 70),
                    ("Gaps in recall of everyday events beyond ordinary forgetting", "moderate", 30, 70),
                    ("Voices or internal dialogue attributed to other states", "moderate", 30, 50),
                ],
                [
                    "Identity is disrupted by the presence of two or more distinct "
                    "personality states, with marked discontinuities in the sense of "
                    "self and agency.",
                    "At least two of the states recurrently take executive control of "
                    "consciousness and functioning, with associated memory gaps.",
                ],
            ),
            d(
                "6B66",
                "Depersonalization-derealization disorder",
                "Depersonalization-derealization disorder involves persistent or "
                "recurrent experiences of detachment from one's own mind, body, or "
                "actions, or of the surroundings as unreal or dreamlike, during which "
                "reality testing remains intact.",
                [
                    ("Persistent or recurrent experiences of detachment from one's own mind, body, or actions", "high", 70, 90),
                    ("Experiences of surroundings as unreal, dreamlike, or visually distorted", "moderate", 50, 70),
                    ("Intact reality testing during the experiences", "high", 70, 90),
                    ("Distress or impairment arising from the experiences", "moderate", 30, 70),
                ],
                [
                    "Persistent or recurrent experiences of depersonalization, "
                    "derealization, or both are present.",
                    "Reality testing remains intact during the experiences.",
                ],
            ),
        ],
    },
    {
        "abbreviation": "ELIM",
        "name": "Elimination disorders",
        "definition": (
            "Elimination disorders involve the repeated voiding of urine (enuresis) or "
            "passing of faeces (encopresis) in inappropriate places after the "
            "developmental age at which continence is ordinarily expected, about five "
            "years for bladder control and four years for bowel control. The behaviour "
            "is not fully explained by another health condition, a congenital or "
            "acquired abnormality of the urinary or gastrointestinal tract, or "
            "medication effects."
        ),
        "disorders": [
            d(
                "6C01",
                "Encopresis",
                "Encopresis is the repeated passage of faeces in inappropriate places "
                "such as clothing or the floor, whether involuntary or intentional, "
                "after the developmental age of about four years, commonly accompanied "
                "by stool withholding, constipation, and overflow soiling.",
                [
                    ("Repeated passage of faeces in inappropriate places such as clothing", "high", 70, 90),
                    ("Stool withholding with retentive posturing and constipation", "moderate", 50, 70),
                    ("Overflow soiling secondary to faecal impaction", "moderate", 30, 70),
                    ("Shame, concealment of soiled clothing, and social withdrawal", "moderate", 30, 50),
                ],
                [
                    "There is repeated passage of faeces in inappropriate places, "
                    "whether involuntary or intentional, after the developmental age at "
                    "which bowel control is ordinarily expected (about four years).",
                    "The behaviour occurs at least once a month over a period of several "
                    "months and is not fully attributable to another health condition or "
                    "to medication.",
                ],
            ),
        ],
    },
    {
        "abbreviation": "EAT",
        "name": "Feeding or eating disorders",
        "definition": (
            "Feeding or eating disorders involve abnormal eating or feeding behaviours "
            "that are not explained by another health condition and are not "
            "developmentally appropriate or culturally sanctioned. The grouping "
            "includes eating disorders in which disturbed eating is accompanied by "
            "preoccupation with food, body weight, and shape, and feeding disturbances "
            "such as ingestion of non-food substances or regurgitation that occur "
            "without such preoccupation."
        ),
        "disorders": [
            d(
                "6B80",
                "Anorexia Nervosa",
                "Anorexia Nervosa is characterized by significantly low body weight for "
                "height, age, and developmental stage, maintained by persistent "
                "restriction of energy intake or other behaviour aimed at preventing "
                "weight restoration, together with body weight or shape being unduly "
                "central to self-evaluation, commonly with intense fear of gaining "
                "weight.",
                [
                    ("Significantly low body weight for height and developmental stage", "high", 70, 90),
                    ("Persistent restriction of energy intake", "high", 70, 90),
                    ("Intense fear of weight gain or behaviour interfering with weight restoration", "moderate", 50, 70),
                    ("Body weight or shape unduly central to self-evaluation, with distorted body experience", "moderate", 30, 70),
                    ("Excessive exercise, purging, or laxative use to influence weight", "moderate", 30, 50),
                    ("Amenorrhoea or other endocrine disturbance", "low", 10, 30),
                ],
                [
                    "Body weight is significantly low for height, age, and developmental "
                    "stage (for adults, a body mass index below about 18.5) and the low "
                    "weight is not due to another health condition or to unavailability "
                    "of food.",
                    "The low weight is accompanied by a persistent pattern of behaviour "
                    "aimed at preventing restoration of normal weight, and low body "
                    "weight or shape is central to self-evaluation.",
                ],
            ),
            d(
                "6B81",
                "Bulimia Nervosa",
                "Bulimia Nervosa is characterized by frequent, recurrent episodes of "
                "binge eating with a sense of loss of control, accompanied by repeated "
                "inappropriate compensatory behaviours intended to prevent weight gain, "
                "and by self-evaluation unduly influenced by body shape and weight, "
                "without significantly low body weight.",
                [
                    ("Recurrent episodes of binge eating with a sense of loss of control", "high", 70, 90),
                    ("Repeated inappropriate compensatory behaviours such as self-induced vomiting", "high", 70, 90),
                    ("Preoccupation with body shape and weight central to self-evaluation", "moderate", 50, 70),
                    ("Secrecy and shame around eating episodes", "moderate", 30, 50),
                    ("Dental enamel erosion, parotid swelling, or electrolyte disturbance", "low", 10, 30),
                ],
                [
                    "Frequent, recurrent episodes of binge eating occur (for example "
                    "once a week or more over at least one month) with a sense of loss "
                    "of control over eating.",
                    "Binge eating is accompanied by repeated inappropriate compensatory "
                    "behaviours intended to prevent weight gain, and self-evaluation is "
                    "unduly influenced by body shape or weight, without significantly "
                    "low body weight.",
                ],
            ),
            d(
                "6B82",
                "Binge eating disorder",
                "Binge eating disorder is characterized by frequent, recurrent episodes "
                "of binge eating, for instance once a week or more over a period of "
                "several months, during which the individual experiences loss of "
                "control and eats notably more than usual in a short time. Episodes are "
                "followed by marked distress and negative emotions such as shame or "
                "guilt, and are not regularly accompanied by compensatory behaviours "
                "aimed at preventing weight gain, which distinguishes the condition "
                "from bulimia nervosa.",
                [
                    ("Recurrent binge eating with consumption of unusually large amounts of food and a sense of loss of control", "high", 70, 90),
                    ("Marked distress after binge episodes with guilt, shame, or self-disgust", "high", 70, 90),
                    ("Eating in response to negative emotions such as anxiety or loneliness", "moderate", 50, 70),
                    ("Frequent night eating, especially during emotional fluctuation", "moderate", 30, 50),
                    ("Persistent desire to eat in the absence of physical hunger", "moderate", 30, 50),
                    ("Avoidance of social situations involving eating in public", "low", 10, 30),
                ],
                [
                    "Binge eating episodes recur at least about once a week over a "
                    "period of three months or more, with a subjective sense of loss of "
                    "control and consumption of notably more food than usual within a "
                    "short period.",
                    "The episodes are followed by significant negative emotions such as "
                    "shame, guilt, or disgust.",
                    "The episodes are not regularly accompanied by compensatory "
                    "behaviours such as self-induced vomiting, excessive exercise, or "
                    "laxative misuse.",
                ],
                supportive=[
                    "Frequent eating at night, especially when bored or under stress.",
                    "Persistent craving for food even when not physically hungry.",
                    "Avoidance of social situations due to fear of eating in public.",
                    "Significant concern about body weight and shape with low self-evaluation.",
                ],
                threshold=(
                    "Meeting all mandatory criteria confirms the diagnosis; if only "
                    "some mandatory criteria are met but multiple supportive features "
                    "are present, further assessment of psychosocial factors and family "
                    "history is warranted."
                ),
            ),
            d(
                "6B83",
                "Avoidant-restrictive food intake disorder",
                "Avoidant-restrictive food intake disorder involves avoidance or "
                "restriction of food intake that results in significant weight loss, "
                "nutritional deficiency, dependence on supplements, or marked "
                "functional impairment, and that is not driven by preoccupation with "
                "body weight or shape.",
                [
                    ("Avoidance or restriction of food intake leading to significant weight loss or nutritional deficiency", "high", 70, 90),
                    ("Absence of preoccupation with body weight or shape", "high", 70, 90),
                    ("Reliance on oral supplements or tube feeding to maintain intake", "moderate", 50, 70),
                    ("Food avoidance driven by sensory characteristics or feared consequences such as choking", "moderate", 30, 70),
                    ("Interference with family meals and social eating", "moderate", 30, 50),
                ],
                [
                    "Avoidance or restriction of food intake results in significant "
                    "weight loss, clinically significant nutritional deficiencies, "
                    "dependence on supplements or tube feeding, or marked functional "
                    "impairment.",
                    "The eating disturbance is not motivated by preoccupation with body "
                    "weight or shape.",
                ],
            ),
            d(
                "6B84",
                "Pica",
                "Pica is the regular consumption of non-nutritive, non-food substances "
                "such as earth, paper, or paint, persistent or severe enough to require "
                "clinical attention, in an individual past the developmental age of "
                "about two years.",
                [
                    ("Regular eating of non-nutritive, non-food substances such as earth, paper, or paint", "high", 70, 90),
                    ("Persistence of the behaviour beyond the developmental age of about two years", "high", 70, 90),
                    ("Medical complications such as anaemia, lead toxicity, or intestinal obstruction", "moderate", 30, 50),
                    ("Behaviour not part of a culturally sanctioned practice", "moderate", 30, 70),
                ],
                [
                    "There is regular consumption of non-nutritive, non-food substances "
                    "that is persistent or severe enough to require clinical attention, "
                    "in an individual past the developmental age of about two years.",
                    "The behaviour is not part of a culturally sanctioned practice.",
                ],
            ),
            d(
                "6B85",
                "Rumination-regurgitation disorder",
                "Rumination-regurgitation disorder involves intentional and repeated "
                "effortless regurgitation of previously swallowed food back to the "
                "mouth, which may be re-chewed and re-swallowed or deliberately spat "
                "out, occurring frequently over at least several weeks.",
                [
                    ("Repeated effortless regurgitation of previously swallowed food", "high", 70, 90),
                    ("Re-chewing and re-swallowing or deliberate spitting out of regurgitated food", "moderate", 50, 70),
                    ("Episodes occurring several times per week over at least several weeks", "moderate", 30, 70),
                    ("Absence of nausea, retching, or disgust during regurgitation", "moderate", 30, 50),
                    ("Weight loss or dental complications in persistent cases", "low", 10, 30),
                ],
                [
                    "There is intentional and repeated regurgitation of previously "
                    "swallowed food back to the mouth, occurring at least several times "
                    "per week over a period of at least several weeks.",
                    "The regurgitation is not fully attributable to a gastrointestinal "
                    "or other medical condition and occurs past the developmental age "
                    "of about two years.",
                ],
            ),
        ],
    },
    {
        "abbreviation": "PREG",
        "name": "Mental or behavioral disorders associated with pregnancy, childbirth, or the puerperium",
        "definition": (
            "This grouping comprises syndromes associated with pregnancy or the "
            "puerperium, commencing during pregnancy or within about six weeks after "
            "delivery, that involve significant mental and behavioural features. "
            "Presentations are subdivided by whether psychotic symptoms accompany the "
            "syndrome; when the picture also meets the requirements of another "
            "specific mental disorder, that diagnosis is assigned as well."
        ),
        "disorders": [
            d(
                "6E20",
                "Mental or behavioural disorders associated with pregnancy, childbirth or the puerperium, without psychotic symptoms",
                "A mental or behavioural syndrome of clinical severity, most commonly "
                "depressive or anxious in character, that begins during pregnancy or "
                "within about six weeks after delivery and does not include delusions, "
                "hallucinations, or other psychotic symptoms.",
                [
                    ("Depressed or markedly labile mood with onset during pregnancy or within six weeks of delivery", "high", 70, 90),
                    ("Anxiety centred on the infant's health and one's adequacy as a parent", "moderate", 50, 70),
                    ("Tearfulness and exhaustion beyond ordinary postpartum fatigue", "moderate", 30, 70),
                    ("Sleep disturbance not explained by infant care demands", "moderate", 30, 50),
                    ("Reduced bonding with or confidence in caring for the infant", "moderate", 30, 50),
                ],
                [
                    "A mental or behavioural syndrome of clinical severity, commonly "
                    "depressive or anxious in character, begins during pregnancy or "
                    "within about six weeks after delivery.",
                    "Delusions, hallucinations, and other psychotic symptoms are absent.",
                ],
            ),
            d(
                "6E21",
                "Mental or behavioural disorders associated with pregnancy, childbirth or the puerperium, with psychotic symptoms",
                "A mental or behavioural syndrome of clinical severity that begins "
                "during pregnancy or within about six weeks after delivery and includes "
                "psychotic symptoms such as delusions, hallucinations, or grossly "
                "disorganized behaviour, frequently with content concerning the infant.",
                [
                    ("Delusions or hallucinations emerging during pregnancy or within six weeks of delivery", "high", 70, 90),
                    ("Delusional content frequently concerning the infant", "moderate", 50, 70),
                    ("Rapidly fluctuating mood with perplexity or confusion", "moderate", 30, 70),
                    ("Disorganized behaviour impairing care of self or infant", "moderate", 30, 60),
                    ("Clinical risk requiring urgent psychiatric care", "moderate", 30, 50),
                ],
                [
                    "A mental or behavioural syndrome of clinical severity begins during "
                    "pregnancy or within about six weeks after delivery.",
                    "The syndrome includes psychotic symptoms such as delusions, "
                    "hallucinations, or grossly disorganized behaviour.",
                ],
            ),
        ],
    },
    {
        "abbreviation": "MOOD",
        "name": "Mood disorders",
        "definition": (
            "Mood disorders are defined by the occurrence of mood episodes: depressive "
            "episodes of low mood, loss of interest, and reduced energy; manic "
            "episodes of elevated or irritable mood with increased activity; mixed "
            "episodes combining depressive and manic features; and hypomanic episodes "
            "of lesser severity. Bipolar disorders involve manic, mixed, or hypomanic "
            "episodes, usually alternating with depressive episodes, whereas "
            "depressive disorders involve depressive episodes only, with no history of "
            "mania or hypomania. Mood episodes are building blocks of these diagnoses "
            "rather than independent diagnostic entities."
        ),
        "disorders": [
            d(
                "6A60",
                "Bipolar type I disorder",
                "Bipolar type I disorder is defined by the occurrence of at least one "
                "manic or mixed episode, typically alternating over the course of the "
                "illness with depressive episodes and intervals of normal mood.",
                [
                    ("Discrete episodes of euphoric, expansive, or irritable mood with increased energy lasting a week or more", "high", 70, 90),
                    ("Decreased need for sleep during episodes", "moderate", 50, 70),
                    ("Pressured speech, flight of ideas, or racing thoughts", "moderate", 30, 70),
                    ("Impulsive or risk-taking behaviour with damaging consequences", "moderate", 30, 50),
                    ("Interposed depressive episodes with low mood and loss of energy", "moderate", 50, 70),
                ],
                [
                    "At least one manic or mixed episode has occurred: extreme mood "
                    "elevation, expansiveness, or irritability with increased activity "
                    "or energy, present most of the day for at least one week, or any "
                    "duration if hospitalization is required.",
                    "The episode is not attributable to a substance, medication, or "
                    "another medical condition.",
                ],
                no_exclusion=True,
            ),
            d(
                "6A61",
                "Bipolar type II disorder",
                "Bipolar type II disorder is defined by at least one hypomanic episode "
                "and at least one depressive episode, in the absence of any manic or "
                "mixed episode.",
                [
                    ("Hypomanic episodes of persistently elevated or irritable mood lasting at least several days without marked impairment", "high", 70, 90),
                    ("At least one depressive episode with low mood or loss of interest for two weeks or more", "high", 70, 90),
                    ("Increased activity and reduced need for sleep during hypomanic periods", "moderate", 50, 70),
                    ("Absence of any lifetime manic or mixed episode", "moderate", 30, 70),
                ],
                [
                    "At least one hypomanic episode and at least one depressive episode "
                    "have occurred.",
                    "There is no history of manic or mixed episodes.",
                ],
            ),
            d(
                "6A62",
                "Cyclothymic disorder",
                "Cyclothymic disorder is chronic mood instability over two years or "
                "more, with numerous periods of hypomanic and depressive symptoms that "
                "never meet the full definitional requirements of a hypomanic episode "
                "treated as decisive, a depressive episode, a manic episode, or a mixed "
                "episode.",
                [
                    ("Chronic mood instability over two years or more with numerous hypomanic and depressive periods", "high", 70, 90),
                    ("Mood symptoms present on more days than not", "moderate", 50, 70),
                    ("Symptom periods never meeting full requirements for a depressive, manic, or mixed episode", "moderate", 30, 70),
                    ("Distress or functional impairment arising from the instability", "moderate", 30, 50),
                ],
                [
                    "Mood instability with numerous periods of hypomanic and depressive "
                    "symptoms has persisted for at least two years.",
                    "The symptomatic periods have never met the full definitional "
                    "requirements of a depressive, manic, or mixed episode.",
                ],
            ),
            d(
                "6A70",
                "Single episode depressive disorder",
                "Single episode depressive disorder denotes the presence or history of "
                "exactly one depressive episode: at least two weeks of depressed mood "
                "or diminished interest in activities nearly every day, with "
                "accompanying cognitive, behavioural, or neurovegetative symptoms, and "
                "no history of mania, hypomania, or prior depressive episodes.",
                [
                    ("Depressed mood most of the day, nearly every day, for at least two weeks", "high", 70, 90),
                    ("Markedly diminished interest or pleasure in activities", "high", 70, 90),
                    ("Fatigue or loss of energy", "moderate", 50, 70),
                    ("Insomnia or hypersomnia and appetite or weight change", "moderate", 30, 70),
                    ("Feelings of worthlessness or excessive guilt and reduced concentration", "moderate", 30, 60),
                    ("Recurrent thoughts of death or suicidal ideation", "low", 10, 30),
                ],
                [
                    "A depressive episode is present or has occurred: depressed mood or "
                    "diminished interest in activities most of the day, nearly every "
                    "day, for at least two weeks, with accompanying symptoms such as "
                    "difficulty concentrating, worthlessness or guilt, hopelessness, "
                    "sleep or appetite change, psychomotor change, fatigue, or thoughts "
                    "of death.",
                    "There is no history of any prior depressive, manic, hypomanic, or "
                    "mixed episode.",
                ],
            ),
            d(
                "6A71",
                "Recurrent depressive disorder",
                "Recurrent depressive disorder is defined by a history of at least two "
                "depressive episodes separated by several months without significant "
                "mood disturbance, in the absence of any manic, hypomanic, or mixed "
                "episode.",
                [
                    ("Repeated depressive episodes of low mood or loss of interest lasting two weeks or more", "high", 70, 90),
                    ("Symptom-free or nearly symptom-free intervals of several months between episodes", "moderate", 50, 70),
                    ("Fatigue, sleep disturbance, and appetite change during episodes", "moderate", 30, 70),
                    ("Reduced concentration and indecisiveness during episodes", "moderate", 30, 60),
                    ("Thoughts of death or suicide during severe episodes", "low", 10, 30),
                ],
                [
                    "At least two depressive episodes have occurred, separated by at "
                    "least several months without significant mood disturbance.",
                    "There is no history of manic, hypomanic, or mixed episodes.",
                ],
            ),
            d(
                "6A72",
                "Dysthymic disorder",
                "Dysthymic disorder is a persistent depressive disturbance in which "
                "depressed mood is present for most of the day, on more days than not, "
                "over a period of two years or more, with symptoms that for most of "
                "the time fall below the threshold of a depressive episode.",
                [
                    ("Persistent depressed mood for most of the day, on most days, lasting two years or more", "high", 70, 90),
                    ("Periods of normal mood rarely lasting longer than a few weeks", "moderate", 50, 70),
                    ("Low energy, poor self-esteem, and mild loss of interest", "moderate", 30, 70),
                    ("Symptom pattern below the threshold of a full depressive episode for much of the time", "moderate", 30, 60),
                ],
                [
                    "Depressed mood has persisted for most of the day, on more days "
                    "than not, over a period of two years or more.",
                    "During at least the first two years the symptom pattern has not "
                    "met the definitional requirements of a depressive episode for most "
                    "of the time.",
                ],
            ),
            d(
                "6A73",
                "Mixed depressive and anxiety disorder",
                "Mixed depressive and anxiety disorder involves both depressive and "
                "anxiety symptoms on most days for two weeks or more, where neither "
                "set of symptoms, considered separately, is severe, numerous, or "
                "persistent enough to justify a depressive disorder or an anxiety or "
                "fear-related disorder diagnosis on its own.",
                [
                    ("Concurrent depressive and anxiety symptoms on most days for two weeks or more", "high", 70, 90),
                    ("Neither symptom cluster severe or pervasive enough for a depressive or anxiety disorder diagnosis alone", "moderate", 50, 70),
                    ("Tension, worry, low mood, and reduced pleasure intermixed", "moderate", 30, 70),
                    ("Distress or impairment attributable to the combined symptoms", "moderate", 30, 50),
                ],
                [
                    "Both depressive and anxiety symptoms are present on most days for "
                    "a period of two weeks or more.",
                    "Neither set of symptoms, considered separately, is sufficiently "
                    "severe, numerous, or persistent to justify the diagnosis of a "
                    "depressive disorder or an anxiety or fear-related disorder.",
                ],
            ),
        ],
    },
    {
        "abbreviation": "NCOG",
        "name": "Neurocognitive disorders",
        "definition": (
            "Neurocognitive disorders are acquired conditions in which the core "
            "clinical deficit is in cognitive function, representing a decline from a "
            "previously attained level rather than a developmental impairment. The "
            "grouping includes delirium, mild neurocognitive disorder, amnestic "
            "disorder, and dementia, with the presumed underlying cause recorded where "
            "known."
        ),
        "disorders": [
            d(
                "6D70",
                "Delirium",
                "Delirium is a disturbance of attention and awareness that develops "
                "over a short period, typically hours to a few days, tends to fluctuate "
                "during the day, and is accompanied by other cognitive disturbance, "
                "attributable to a medical condition, substance intoxication or "
                "withdrawal, or medication.",
                [
                    ("Disturbance of attention and awareness developing over hours to a few days", "high", 70, 90),
                    ("Fluctuation of symptom severity over the course of the day", "high", 70, 90),
                    ("Additional cognitive disturbance such as disorientation or perceptual distortion", "moderate", 50, 70),
                    ("Disrupted sleep-wake cycle with nocturnal worsening", "moderate", 30, 70),
                    ("Evidence of a causal medical condition, substance, or withdrawal state", "moderate", 30, 60),
                ],
                [
                    "A disturbance of attention and awareness develops over a short "
                    "period, typically hours to a few days, tends to fluctuate during "
                    "the course of the day, and is accompanied by other cognitive "
                    "disturbance.",
                    "There is evidence that the disturbance is a direct physiological "
                    "consequence of a medical condition, substance intoxication or "
                    "withdrawal, or medication.",
                ],
                no_exclusion=True,
            ),
            d(
                "6D71",
                "Mild neurocognitive disorder",
                "Mild neurocognitive disorder is subjective cognitive decline "
                "accompanied by objective evidence of modest impairment in one or more "
                "cognitive domains, not severe enough to interfere significantly with "
                "independence in everyday activities.",
                [
                    ("Subjective experience of cognitive decline from the previous level", "high", 70, 90),
                    ("Modest objective impairment on cognitive assessment", "high", 70, 90),
                    ("Preserved independence in everyday activities", "moderate", 50, 70),
                    ("Greater effort or compensatory strategies needed for complex tasks", "moderate", 30, 70),
                ],
                [
                    "There is subjective cognitive decline accompanied by objective "
                    "evidence of modest impairment in one or more cognitive domains "
                    "relative to what is expected for age and general premorbid level.",
                    "The impairment is not severe enough to interfere significantly "
                    "with independence in everyday activities.",
                ],
            ),
            d(
                "6D72",
                "Amnestic disorder",
                "Amnestic disorder is prominent impairment of memory relative to other "
                "cognitive domains, with severe difficulty learning new information, "
                "attributable to an underlying condition and not occurring exclusively "
                "during delirium or dementia.",
                [
                    ("Prominent memory impairment disproportionate to other cognitive functions", "high", 70, 90),
                    ("Severe difficulty learning new information", "high", 70, 90),
                    ("Variable loss of previously learned information", "moderate", 50, 70),
                    ("Relative preservation of attention, language, and reasoning", "moderate", 30, 70),
                    ("Confabulation in some presentations", "low", 10, 30),
                ],
                [
                    "Prominent impairment of memory relative to other cognitive domains "
                    "represents a decline from the previous level of functioning.",
                    "The impairment is attributable to an underlying condition such as "
                    "thiamine deficiency, head injury, or cerebral hypoxia, and does "
                    "not occur exclusively during delirium or dementia.",
                ],
                no_exclusion=True,
            ),
            d(
                "6D81",
                "Dementia due to cerebrovascular disease",
                "A dementia in which cognitive decline in two or more domains, "
                "sufficient to impair independence, is attributable to cerebrovascular "
                "disease, classically with stepwise deterioration, executive slowing, "
                "and focal neurological signs.",
                [
                    ("Cognitive decline in two or more domains severe enough to impair independence", "high", 70, 90),
                    ("Temporal relationship between cognitive decline and cerebrovascular events", "moderate", 50, 70),
                    ("Focal neurological signs or imaging evidence of vascular lesions", "moderate", 50, 70),
                    ("Stepwise deterioration with plateaus", "moderate", 30, 70),
                    ("Prominent slowing of processing speed and executive dysfunction", "moderate", 30, 60),
                ],
                [
                    "Dementia-level decline in two or more cognitive domains interferes "
                    "with independence in everyday activities.",
                    "History, examination, or neuroimaging indicates cerebrovascular "
                    "disease judged sufficient to account for the decline.",
                ],
                no_exclusion=True,
            ),
            d(
                "6D83",
                "Frontotemporal dementia",
                "Frontotemporal dementia is a progressive dementia with predominant "
                "and early decline in behaviour, executive function, or language, with "
                "features such as disinhibition, apathy, loss of empathy, "
                "perseveration, and speech output decline, and relative sparing of "
                "memory early in the course.",
                [
                    ("Early and progressive change in personality and social conduct such as disinhibition or apathy", "high", 70, 90),
                    ("Deterioration of language with reduced output or semantic loss", "moderate", 50, 70),
                    ("Hyperorality or ritualistic, perseverative behaviours", "moderate", 30, 60),
                    ("Relative preservation of memory and visuospatial function early in the course", "moderate", 30, 70),
                    ("Loss of insight early in the course", "moderate", 30, 50),
                ],
                [
                    "There is progressive dementia with predominant and early decline "
                    "in behaviour, executive function, or language.",
                    "Features such as disinhibition, apathy, loss of empathy, "
                    "perseveration, or declining speech output dominate, with relative "
                    "sparing of memory early in the course.",
                ],
                no_exclusion=True,
            ),
            d(
                "6D84",
                "Dementia due to psychoactive substances including medications",
                "A dementia that develops in the context of prolonged use of a "
                "psychoactive substance or medication and persists well beyond "
                "intoxication and acute withdrawal, with decline sufficient to impair "
                "independence in everyday activities.",
                [
                    ("Dementia-level cognitive decline developing in the context of prolonged substance or medication use", "high", 70, 90),
                    ("Persistence of the impairment well beyond intoxication and acute withdrawal", "high", 70, 90),
                    ("Impairment of memory, executive function, or visuospatial skills on assessment", "moderate", 50, 70),
                    ("History of sustained heavy use of alcohol, sedatives, or other implicated substances", "moderate", 30, 70),
                ],
                [
                    "Dementia-level cognitive decline interferes with independence in "
                    "everyday activities and develops in the context of use of a "
                    "psychoactive substance or medication.",
                    "The decline persists beyond the usual duration of intoxication or "
                    "acute withdrawal of the implicated substance.",
                ],
                no_exclusion=True,
            ),
            d(
                "6D85",
                "Dementia due to diseases classified elsewhere",
                "A dementia occurring as a manifestation of a medical disease "
                "classified outside the mental disorders chapter, such as Parkinson "
                "disease, Huntington disease, or human immunodeficiency virus "
                "infection, with decline sufficient to impair independence.",
                [
                    ("Progressive cognitive decline occurring as a manifestation of a diagnosed medical disease", "high", 70, 90),
                    ("Decline sufficient to impair independence in everyday activities", "high", 70, 90),
                    ("Cognitive profile consistent with the underlying disease", "moderate", 50, 70),
                    ("Neurological signs of the underlying condition", "moderate", 30, 70),
                ],
                [
                    "Dementia-level decline in two or more cognitive domains interferes "
                    "with independence in everyday activities.",
                    "The decline is attributable to a medical condition classified "
                    "elsewhere, such as Parkinson disease, Huntington disease, or human "
                    "immunodeficiency virus infection.",
                ],
                no_exclusion=True,
            ),
            d(
                "6D86",
                "Behavioural or psychological disturbances in dementia",
                "Clinically significant behavioural or psychological symptoms occurring "
                "in an individual with dementia, such as psychotic symptoms, agitation, "
                "wandering, apathy, disinhibition, or mood disturbance, severe enough "
                "to require clinical attention beyond the cognitive syndrome itself.",
                [
                    ("Clinically significant behavioural or psychological symptoms in a person with dementia", "high", 70, 90),
                    ("Agitation, aggression, or wandering", "moderate", 50, 70),
                    ("Psychotic symptoms such as delusions of theft or misidentification", "moderate", 30, 60),
                    ("Apathy, mood lability, or disinhibition", "moderate", 30, 70),
                    ("Disturbance of the sleep-wake cycle", "moderate", 30, 50),
                ],
                [
                    "Dementia is established, and prominent behavioural or "
                    "psychological disturbances such as psychotic symptoms, agitation, "
                    "apathy, or mood disturbance are present.",
                    "The disturbances are severe enough to require clinical attention "
                    "beyond the cognitive syndrome itself.",
                ],
                no_exclusion=True,
            ),
        ],
    },
    {
        "abbreviation": "NDEV",
        "name": "Neurodevelopmental disorders",
        "definition": (
            "Neurodevelopmental disorders arise during the developmental period, "
            "typically in infancy or childhood, and involve significant difficulty in "
            "the acquisition and execution of specific intellectual, motor, language, "
            "or social functions. The developmental deficit, rather than loss of a "
            "previously attained ability, is the primary feature and produces "
            "impairment in social, academic, or occupational functioning."
        ),
        "disorders": [
            d(
                "6A00",
                "Disorders of intellectual development",
                "Disorders of intellectual development are characterized by "
                "significantly below-average intellectual functioning and adaptive "
                "behaviour, approximately two or more standard deviations below the "
                "population mean, with onset during the developmental period.",
                [
                    ("Significantly below-average intellectual functioning, about two standard deviations or more below the mean", "high", 70, 90),
                    ("Significant limitation of adaptive behaviour in conceptual, social, and practical domains", "high", 70, 90),
                    ("Onset during the developmental period", "high", 70, 90),
                    ("Need for support with schooling and everyday tasks", "moderate", 50, 70),
                ],
                [
                    "Intellectual functioning, measured by standardized testing or "
                    "comparable behavioural indicators, is approximately two or more "
                    "standard deviations below the population mean.",
                    "Adaptive behaviour is similarly limited, and onset occurred during "
                    "the developmental period.",
                ],
            ),
            d(
                "6A02",
                "Autism spectrum disorder",
                "Autism spectrum disorder is characterized by persistent deficits in "
                "the ability to initiate and sustain reciprocal social interaction and "
                "social communication, together with restricted, repetitive, and "
                "inflexible patterns of behaviour, interests, or activities, with "
                "onset in the developmental period.",
                [
                    ("Persistent deficits in initiating and sustaining social communication and reciprocal interaction", "high", 70, 90),
                    ("Restricted, repetitive, and inflexible patterns of behaviour, interests, or activities", "high", 70, 90),
                    ("Atypical response to sensory input such as unusual sensitivity to sounds or textures", "moderate", 50, 70),
                    ("Insistence on sameness and distress at small changes in routine", "moderate", 30, 70),
                    ("Onset during the developmental period, typically early childhood", "moderate", 50, 70),
                ],
                [
                    "Persistent deficits are present in the ability to initiate and "
                    "sustain reciprocal social interaction and social communication, "
                    "outside the expected range for age and intellectual level.",
                    "Restricted, repetitive, and inflexible patterns of behaviour, "
                    "interests, or activities are present, with onset in the "
                    "developmental period.",
                ],
            ),
            d(
                "6A03",
                "Developmental learning disorder",
                "Developmental learning disorder involves significant and persistent "
                "difficulty learning academic skills such as reading, writing, or "
                "arithmetic, with performance markedly below the level expected for "
                "age and general intellectual functioning, emerging during the school "
                "years.",
                [
                    ("Persistent difficulty learning academic skills such as reading, writing, or arithmetic", "high", 70, 90),
                    ("Academic performance markedly below the level expected for age and general intellect", "high", 70, 90),
                    ("Difficulties emerging during the years of formal schooling", "moderate", 50, 70),
                    ("Impairment not explained by inadequate schooling or uncorrected sensory deficits", "moderate", 30, 70),
                ],
                [
                    "There is significant and persistent difficulty in learning one or "
                    "more academic skills, with performance markedly below the level "
                    "expected for chronological age and general intellectual "
                    "functioning.",
                    "The difficulty emerged during the school years and is not "
                    "explained by inadequate education, sensory impairment, or a "
                    "neurological condition.",
                ],
            ),
            d(
                "6A04",
                "Developmental motor coordination disorder",
                "Developmental motor coordination disorder involves marked delay in "
                "acquiring gross and fine motor skills and clumsiness, slowness, or "
                "inaccuracy of motor performance that significantly interferes with "
                "self-care, schoolwork, and play, beginning in the developmental "
                "period.",
                [
                    ("Marked delay in acquiring gross and fine motor skills", "high", 70, 90),
                    ("Clumsiness with slowness or inaccuracy of motor performance", "high", 70, 90),
                    ("Interference with self-care, schoolwork, and play", "moderate", 50, 70),
                    ("Onset in the developmental period without an explanatory neurological disease", "moderate", 30, 70),
                ],
                [
                    "Acquisition of gross and fine motor skills is markedly delayed, "
                    "with clumsiness, slowness, or inaccuracy of motor performance "
                    "outside the expected range for age.",
                    "The motor difficulties significantly interfere with self-care, "
                    "academic, or leisure activities, began in the developmental "
                    "period, and are not explained by a disease of the nervous system.",
                ],
            ),
            d(
                "6A05",
                "Attention deficit hyperactivity disorder",
                "Attention deficit hyperactivity disorder is a persistent pattern, "
                "lasting at least six months, of inattention and/or "
                "hyperactivity-impulsivity outside the expected range for age and "
                "intellectual level, evident across settings and beginning in the "
                "developmental period, typically before age twelve.",
                [
                    ("Persistent inattention with distractibility, disorganization, and difficulty sustaining focus", "high", 70, 90),
                    ("Hyperactivity with excessive motor activity and restlessness", "moderate", 50, 70),
                    ("Impulsivity with acting without deliberation and interrupting others", "moderate", 50, 70),
                    ("Symptoms evident across home, school, or work settings", "moderate", 30, 70),
                    ("Onset during the developmental period, typically before age twelve", "moderate", 30, 60),
                ],
                [
                    "A persistent pattern of inattention and/or hyperactivity-"
                    "impulsivity has lasted at least six months, is outside the "
                    "expected range for age and intellectual level, and is evident in "
                    "more than one setting.",
                    "Symptoms began during the developmental period, typically before "
                    "the age of twelve.",
                ],
            ),
            d(
                "6A06",
                "Stereotyped movement disorder",
                "Stereotyped movement disorder involves voluntary, repetitive, "
                "apparently purposeless movements such as body rocking, hand flapping, "
                "or head banging, arising in the developmental period, that interfere "
                "with normal activities or risk self-injury.",
                [
                    ("Voluntary, repetitive, apparently purposeless movements such as rocking, hand flapping, or head banging", "high", 70, 90),
                    ("Onset during the developmental period", "high", 70, 90),
                    ("Interference with normal activities or risk of self-injury", "moderate", 50, 70),
                    ("Movements not explained by tics, compulsions, or another condition", "moderate", 30, 70),
                ],
                [
                    "Voluntary, repetitive, stereotyped, apparently purposeless "
                    "movements are present, arising during the developmental period.",
                    "The movements markedly interfere with normal activities or result "
                    "in risk of self-injury.",
                ],
            ),
        ],
    },
    {
        "abbreviation": "OCD",
        "name": "Obsessive-compulsive or related disorders",
        "definition": (
            "This grouping is anchored by the presence of repetitive unwanted "
            "thoughts, images, urges, or preoccupations, together with repetitive "
            "behaviours or mental rituals performed in response. Presentations "
            "include classic obsessions with compulsions, preoccupations with bodily "
            "appearance, odour, or illness with associated checking, accumulation of "
            "possessions, and recurrent body-focused repetitive behaviours, all "
            "causing distress or functional impairment despite the individual's "
            "frequent awareness that the behaviour is excessive."
        ),
        "disorders": [
            d(
                "6B20",
                "Obsessive-compulsive disorder",
                "Obsessive-compulsive disorder is characterized by persistent "
                "obsessions, unwanted intrusive thoughts, images, or urges, and/or "
                "compulsions, repetitive behaviours or mental acts performed in "
                "response to the obsessions or according to rigid rules, that are "
                "time-consuming or cause significant distress or impairment.",
                [
                    ("Recurrent intrusive, unwanted thoughts, images, or urges experienced as distressing", "high", 70, 90),
                    ("Repetitive behaviours or mental rituals performed in response to obsessions or rigid rules", "high", 70, 90),
                    ("Symptoms consuming more than an hour a day", "moderate", 50, 70),
                    ("Attempts to suppress or neutralize the intrusive thoughts", "moderate", 30, 70),
                    ("Avoidance of situations that trigger the obsessions", "moderate", 30, 50),
                ],
                [
                    "Persistent obsessions (unwanted intrusive thoughts, images, or "
                    "urges) and/or compulsions (repetitive behaviours or mental acts "
                    "performed in response) are present.",
                    "The symptoms are time-consuming, for example taking more than an "
                    "hour per day, or produce significant distress or impairment.",
                ],
            ),
            d(
                "6B21",
                "Body dysmorphic disorder",
                "Body dysmorphic disorder is persistent preoccupation with one or more "
                "perceived defects or flaws in appearance that are unnoticeable or "
                "only slightly noticeable to others, accompanied by repetitive "
                "checking, grooming, camouflaging, or comparison behaviours.",
                [
                    ("Preoccupation with one or more perceived defects in appearance unnoticeable or slight to others", "high", 70, 90),
                    ("Repetitive checking, grooming, or camouflaging of the perceived defect", "moderate", 50, 70),
                    ("Comparing one's appearance with that of others", "moderate", 30, 70),
                    ("Avoidance of social situations or of mirrors", "moderate", 30, 50),
                    ("Repeated seeking of cosmetic procedures", "low", 10, 30),
                ],
                [
                    "There is persistent preoccupation with one or more perceived "
                    "defects or flaws in appearance that are unnoticeable or only "
                    "slightly noticeable to others.",
                    "The preoccupation is accompanied by repetitive and excessive "
                    "behaviours such as checking, grooming, camouflaging, or avoidance.",
                ],
            ),
            d(
                "6B22",
                "Olfactory reference disorder",
                "Olfactory reference disorder is persistent preoccupation with the "
                "belief that one is emitting a foul or offensive body odour that is "
                "unnoticeable or only slightly noticeable to others, with repetitive "
                "checking, excessive washing, masking, or avoidance.",
                [
                    ("Persistent preoccupation with the belief of emitting a foul or offensive body odour", "high", 70, 90),
                    ("Repetitive checking for odour, excessive washing, or masking with perfume", "moderate", 50, 70),
                    ("Interpretation of others' gestures or comments as reactions to the odour", "moderate", 30, 70),
                    ("Avoidance of social contact because of the believed odour", "moderate", 30, 50),
                ],
                [
                    "There is persistent preoccupation with the belief of emitting a "
                    "perceived foul or offensive body odour that is unnoticeable or "
                    "only slightly noticeable to others.",
                    "The preoccupation is accompanied by repetitive checking, "
                    "camouflaging, or avoidance behaviours.",
                ],
            ),
            d(
                "6B23",
                "Hypochondriasis",
                "Hypochondriasis is persistent preoccupation with, or fear about, the "
                "possibility of having one or more serious, progressive, or "
                "life-threatening illnesses, with catastrophic misinterpretation of "
                "bodily signs and repeated health-related checking or maladaptive "
                "avoidance.",
                [
                    ("Persistent preoccupation with or fear of having one or more serious illnesses", "high", 70, 90),
                    ("Catastrophic misinterpretation of ordinary bodily signs and sensations", "moderate", 50, 70),
                    ("Repeated health-related checking and reassurance seeking, or maladaptive avoidance of care", "moderate", 50, 70),
                    ("Persistence of the concern despite negative medical evaluation", "moderate", 30, 70),
                ],
                [
                    "There is persistent preoccupation with, or fear about, the "
                    "possibility of having one or more serious, progressive, or "
                    "life-threatening illnesses.",
                    "The preoccupation is accompanied by catastrophic "
                    "misinterpretation of bodily signs, repeated excessive checking or "
                    "reassurance seeking, or maladaptive avoidance, and persists "
                    "despite appropriate evaluation and reassurance.",
                ],
            ),
            d(
                "6B24",
                "Hoarding disorder",
                "Hoarding disorder is the accumulation of possessions, due to "
                "excessive acquisition or difficulty discarding regardless of actual "
                "value, resulting in cluttered living spaces whose use or safety is "
                "compromised, with distress when discarding is attempted.",
                [
                    ("Accumulation of possessions resulting in cluttered living spaces whose use is compromised", "high", 70, 90),
                    ("Marked distress when discarding or parting with possessions", "high", 70, 90),
                    ("Urges to save items or excessive acquisition", "moderate", 50, 70),
                    ("Compromised safety or hygiene of the home environment", "moderate", 30, 60),
                    ("Limited insight into the extent of the problem", "moderate", 30, 50),
                ],
                [
                    "Accumulation of possessions results in living spaces becoming "
                    "cluttered to the point that their use or safety is compromised.",
                    "The accumulation is due to repetitive urges or behaviours related "
                    "to amassing items, or to difficulty discarding possessions "
                    "regardless of their actual value.",
                ],
            ),
            d(
                "6B25",
                "Body-focused repetitive behaviour disorders",
                "Body-focused repetitive behaviour disorders involve recurrent, "
                "habitual actions directed at the integument, most commonly hair "
                "pulling or skin picking, resulting in hair loss or skin lesions, with "
                "repeated unsuccessful attempts to decrease or stop the behaviour.",
                [
                    ("Recurrent pulling of one's hair or picking of one's skin resulting in hair loss or lesions", "high", 70, 90),
                    ("Repeated unsuccessful attempts to decrease or stop the behaviour", "moderate", 50, 70),
                    ("Tension before the act with relief or gratification afterwards", "moderate", 30, 70),
                    ("Dermatological damage, scarring, or patchy hair loss", "moderate", 30, 50),
                ],
                [
                    "There is recurrent hair pulling, skin picking, or a comparable "
                    "body-focused repetitive behaviour resulting in dermatological "
                    "damage such as hair loss or skin lesions.",
                    "Repeated attempts to decrease or stop the behaviour have been "
                    "unsuccessful.",
                ],
            ),
        ],
    },
    {
        "abbreviation": "PERS",
        "name": "Personality disorders and related traits",
        "definition": (
            "Personality disorder is an enduring disturbance in functioning of the "
            "self, such as identity and self-worth, and in interpersonal functioning, "
            "expressed in maladaptive patterns of cognition, emotional experience and "
            "expression, and behaviour. The disturbance extends across a range of "
            "personal and social situations, has persisted for an extended period of "
            "two years or more with onset commonly in adolescence, and is not "
            "explained by another mental disorder, a substance, or a medical "
            "condition. Prominent personality traits below the disorder threshold are "
            "also recorded in this territory."
        ),
        "disorders": [
            d(
                "6D10",
                "Personality disorder",
                "Personality disorder is an enduring disturbance, lasting two years or "
                "more, in how the individual experiences and thinks about the self, "
                "others, and the world, manifest in maladaptive patterns of cognition, "
                "emotional experience and expression, and behaviour across personal "
                "and social situations.",
                [
                    ("Pervasive problems in functioning of the self, such as unstable identity or self-worth", "high", 70, 90),
                    ("Marked interpersonal dysfunction across relationships and contexts", "high", 70, 90),
                    ("Maladaptive emotional expression poorly regulated in intensity or duration", "moderate", 50, 70),
                    ("Disturbance stable over two years or more with onset commonly in adolescence", "moderate", 50, 70),
                    ("Patterns manifest across a range of personal and social situations", "moderate", 30, 70),
                ],
                [
                    "An enduring disturbance in functioning of the self and in "
                    "interpersonal functioning is expressed in maladaptive patterns of "
                    "cognition, emotional experience, and behaviour.",
                    "The disturbance has persisted over an extended period (two years "
                    "or more), is manifest across a range of personal and social "
                    "situations, and is not developmentally appropriate.",
                ],
            ),
        ],
    },
    {
        "abbreviation": "SCHIZ",
        "name": "Schizophrenia or other primary psychotic disorders",
        "definition": (
            "Schizophrenia or other primary psychotic disorders are characterized by "
            "significant impairment in reality testing and alterations in behaviour. "
            "Positive symptoms include persistent delusions, persistent "
            "hallucinations, disorganized thinking and speech, and experiences of "
            "passivity and control; negative symptoms include blunted affect, "
            "avolition, and social withdrawal; cognitive impairments of attention, "
            "memory, and executive function are common. The symptoms deviate markedly "
            "from cultural norms and are not attributable to another mental disorder, "
            "a substance, or a medical condition."
        ),
        "disorders": [
            d(
                "6A20",
                "Schizophrenia",
                "Schizophrenia is a psychotic disorder involving disturbances in "
                "multiple mental modalities, including thinking (persistent delusions "
                "and disorganization in the form of thought), perception (persistent "
                "hallucinations, most commonly auditory), self-experience (passivity "
                "and control phenomena), cognition, volition, and affect, with "
                "symptoms persisting for at least one month.",
                [
                    ("Persistent delusions such as ideas of reference or persecution", "high", 70, 90),
                    ("Persistent hallucinations, most commonly hearing voices", "high", 70, 90),
                    ("Disorganized thinking evident as tangential or incoherent speech", "moderate", 50, 70),
                    ("Experiences of influence, passivity, or control over thoughts or actions", "moderate", 30, 70),
                    ("Negative symptoms such as blunted affect, alogia, or avolition", "moderate", 30, 60),
                    ("Psychomotor disturbance including catatonic features", "low", 10, 30),
                ],
                [
                    "At least two characteristic symptom clusters, of which at least "
                    "one is a core psychotic symptom (persistent delusions, persistent "
                    "hallucinations, disorganized thinking, or experiences of "
                    "influence, passivity, or control), must be present most of the "
                    "time for a duration of at least one month.",
                    "The symptoms cause significant distress or impairment in "
                    "personal, family, social, educational, or occupational "
                    "functioning.",
                    "The symptoms are not a manifestation of another medical condition "
                    "and are not due to the effect of a substance or medication on the "
                    "central nervous system, including withdrawal effects.",
                ],
                supportive=[
                    "Negative symptoms such as affective flattening, alogia, or avolition.",
                    "Marked decline in social, educational, or occupational functioning from the premorbid level.",
                    "Psychomotor disturbances such as catatonic restlessness or posturing.",
                ],
                threshold=(
                    "At least two symptom clusters, including at least one core "
                    "psychotic symptom, present most of the time for one month or "
                    "longer, with the exclusion requirements satisfied."
                ),
            ),
            d(
                "6A21",
                "Schizoaffective disorder",
                "Schizoaffective disorder is diagnosed when the definitional "
                "requirements of schizophrenia are met concurrently with a moderate or "
                "severe depressive, manic, or mixed mood episode within the same "
                "episode of illness, with psychotic and mood symptoms present "
                "simultaneously for at least one month.",
                [
                    ("Concurrent prominent mood episode and schizophrenia-level psychotic symptoms within the same episode", "high", 70, 90),
                    ("Delusions or hallucinations meeting schizophrenia symptom requirements", "high", 70, 90),
                    ("Depressive or manic syndrome concurrent with the psychotic symptoms", "moderate", 50, 70),
                    ("Episode lasting at least one month", "moderate", 30, 70),
                ],
                [
                    "All definitional requirements of schizophrenia are met "
                    "concurrently with a moderate or severe depressive, manic, or "
                    "mixed episode within the same episode of illness.",
                    "The psychotic and mood symptoms have been simultaneously present "
                    "for at least one month.",
                ],
            ),
            d(
                "6A22",
                "Schizotypal disorder",
                "Schizotypal disorder is an enduring pattern, persisting two years or "
                "more, of eccentricities in speech, perception, beliefs, and "
                "behaviour, with cognitive and perceptual distortions and constricted "
                "or inappropriate affect, that has never met the definitional "
                "requirements of schizophrenia.",
                [
                    ("Enduring eccentricities of behaviour, appearance, and speech", "high", 70, 90),
                    ("Cognitive and perceptual distortions such as unusual beliefs or bodily illusions", "moderate", 50, 70),
                    ("Constricted or inappropriate affect and reduced capacity for pleasure", "moderate", 30, 70),
                    ("Social withdrawal with suspiciousness without firm delusions", "moderate", 30, 60),
                ],
                [
                    "An enduring pattern, persisting two years or more, of "
                    "eccentricities in speech, perception, beliefs, and behaviour is "
                    "present with subthreshold psychotic features.",
                    "The pattern has never met the definitional requirements of "
                    "schizophrenia.",
                ],
            ),
            d(
                "6A23",
                "Acute and transient psychotic disorder",
                "Acute and transient psychotic disorder is an abrupt onset of "
                "psychotic symptoms that reach their peak within two weeks, with "
                "rapidly changing, polymorphic delusions, hallucinations, and "
                "perceptual disturbances, without negative symptoms, resolving within "
                "a few months at most.",
                [
                    ("Abrupt onset of psychotic symptoms reaching a peak within two weeks", "high", 70, 90),
                    ("Rapidly changing, polymorphic delusions, hallucinations, and perceptual disturbances", "moderate", 50, 70),
                    ("Marked day-to-day or within-day fluctuation of symptom type and intensity", "moderate", 30, 70),
                    ("Absence of negative symptoms", "moderate", 30, 60),
                    ("Resolution typically within one to three months", "moderate", 30, 50),
                ],
                [
                    "Psychotic symptoms emerge acutely and reach their peak within two "
                    "weeks, without a preceding prodromal decline.",
                    "The symptoms are polymorphic and fluctuate rapidly, negative "
                    "symptoms are absent, and the episode does not exceed three "
                    "months.",
                ],
            ),
            d(
                "6A24",
                "Delusional disorder",
                "Delusional disorder is the development of one or more stable, often "
                "systematized delusions persisting for at least three months, usually "
                "much longer, in the absence of the other characteristic symptoms of "
                "schizophrenia, with affect, speech, and behaviour typically preserved "
                "outside the delusional theme.",
                [
                    ("One or more stable, well-systematized delusions persisting three months or more", "high", 70, 90),
                    ("Preserved affect, speech, and behaviour outside the delusional theme", "moderate", 50, 70),
                    ("Absence of persistent hallucinations and disorganized thinking", "moderate", 30, 70),
                    ("Actions consistent with the delusional content such as complaints or litigation", "moderate", 30, 50),
                ],
                [
                    "One or more delusions persist for at least three months, and "
                    "usually much longer.",
                    "Other characteristic symptoms of schizophrenia such as persistent "
                    "hallucinations, disorganized thinking, and negative symptoms are "
                    "absent or minimal, and functioning apart from the impact of the "
                    "delusion is comparatively preserved.",
                ],
            ),
        ],
    },
]


def build_disorder(seed: dict) -> dict:
    mandatory = list(seed["core"])
    if IMPAIRMENT not in mandatory:
        mandatory.append(IMPAIRMENT)
    if not seed.get("no_exclusion"):
        mandatory.append(EXCLUSION)
    supportive = seed.get("supportive")
    if supportive is None:
        supportive = [f"{sym}." for sym, _, _, _ in seed["manifestations"][2:]]
    return {
        "code": seed["code"],
        "name": seed["name"],
        "definition": seed["definition"],
        "manifestations": [
            {"symptom": sym, "prevalence_band": band, "band_range": [lo, hi]}
            for sym, band, lo, hi in seed["manifestations"]
        ],
        "criteria": {
            "mandatory": mandatory,
            "supportive": supportive,
            "threshold": seed.get("threshold", DEFAULT_THRESHOLD),
        },
        "content_quality": "fixture",
    }


def main() -> None:
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    total = 0
    for order, cat in enumerate(CATEGORIES, start=1):
        disorders = sorted((build_disorder(s) for s in cat["disorders"]),
                           key=lambda e: e["code"])
        doc = {
            "name": cat["name"],
            "abbreviation": cat["abbreviation"],
            "order": order,
            "definition": cat["definition"],
            "code_list": [e["code"] for e in disorders],
            "content_quality": "fixture",
            "disorders": disorders,
        }
        path = OUT_DIR / f"{order:02d}_{cat['abbreviation'].lower()}.json"
        path.write_text(json.dumps(doc, indent=2, ensure_ascii=False) + "\n",
                        encoding="utf-8")
        total += len(disorders)
        print(f"{path.name}: {len(disorders)} disorders")
    print(f"{len(CATEGORIES)} categories, {total} disorders")


if __name__ == "__main__":
    main()
