// Copyright 2026 The anion-forge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "verbs_data.hpp"

namespace anionforge::verbs_data {

namespace {

// Regularly inflected bases. Everyday event verbs; coverage tuned to short
// "PersonX <verb phrase>" sentences.
constexpr const char* kRegularBases[] = {
    "accept", "accompany", "accomplish", "accuse", "ache", "achieve", "acknowledge", "act",
    "add", "address", "adjust", "admire", "admit", "adopt", "adore", "advertise", "advise",
    "afford", "agree", "aim", "allow", "announce", "annoy", "answer", "apologize", "appear",
    "applaud", "apply", "appreciate", "approach", "approve", "argue", "arrange", "arrest",
    "arrive", "ask", "assist", "assume", "assure", "attack", "attempt", "attend", "attract",
    "avoid", "awake", "bake", "balance", "bark", "bathe", "battle", "behave", "believe",
    "belong", "blame", "bless", "blink", "blush", "boast", "boil", "book", "borrow", "bother",
    "bounce", "bow", "brag", "breathe", "brew", "browse", "brush", "bully", "bump", "burn",
    "bury", "call", "calm", "camp", "cancel", "care", "carry", "carve", "cash", "cause",
    "celebrate", "cease", "chain", "challenge", "change", "charge", "chase", "chat", "cheat",
    "check", "cheer", "chew", "chop", "claim", "clap", "clean", "clear", "climb", "close",
    "coach", "collect", "comb", "comfort", "command", "comment", "commit", "compare",
    "compete", "complain", "complete", "compliment", "concentrate", "confess", "confirm",
    "confront", "confuse", "congratulate", "connect", "consider", "consult", "contact",
    "continue", "convince", "cook", "cooperate", "cope", "copy", "correct", "cough", "count",
    "cover", "crash", "crave", "crawl", "create", "criticize", "cross", "cry", "cuddle",
    "cure", "curse", "dance", "dare", "date", "decide", "declare", "decline", "decorate",
    "dedicate", "defend", "delay", "deliver", "demand", "deny", "depend", "describe",
    "deserve", "design", "desire", "destroy", "develop", "dial", "die", "diet", "direct",
    "disagree", "disappear", "disappoint", "discontinue", "discover", "discuss", "dislike",
    "dismiss", "disobey", "distract", "disturb", "dive", "divide", "divorce", "dodge",
    "donate", "doubt", "download", "drain", "dress", "drop", "drown", "dry", "dust", "earn",
    "educate", "embarrass", "employ", "empty", "encourage", "end", "endure", "enjoy", "enter",
    "entertain", "escape", "examine", "excel", "exchange", "excite", "excuse", "exercise",
    "exit", "expand", "expect", "experience", "explain", "explore", "express", "face", "fail",
    "faint", "fancy", "farm", "fear", "feature", "fetch", "file", "fill", "film", "finish",
    "fire", "fish", "fix", "flip", "flirt", "float", "flood", "flow", "fold", "follow",
    "fool", "force", "forgive", "form", "foster", "frame", "frighten", "frown", "fry",
    "gain", "gamble", "gather", "gaze", "glance", "glare", "glow", "golf", "gossip",
    "grab", "graduate", "greet", "grill", "grin", "groan", "guard", "guess", "guide",
    "handle", "happen", "harm", "hate", "haunt", "heal", "help", "hesitate", "hike", "hire",
    "hop", "hope", "hug", "hum", "hunt", "hurry", "ignore", "imagine", "imitate", "impress",
    "improve", "include", "increase", "inform", "injure", "insist", "inspect", "inspire",
    "install", "insult", "intend", "interrupt", "interview", "introduce", "invent", "invest",
    "investigate", "invite", "involve", "iron", "jog", "join", "joke", "judge", "juggle",
    "jump", "kick", "kiss", "knock", "label", "lack", "land", "last", "laugh", "launch",
    "learn", "lecture", "lick", "lie", "lift", "like", "list", "listen", "live", "loan",
    "lock", "long", "look", "love", "lower", "maintain", "manage", "march", "marry",
    "massage", "master", "match", "matter", "measure", "memorize", "mention", "mess",
    "milk", "mind", "miss", "mix", "moan", "mock", "mop", "move", "mow", "mumble", "murder",
    "nag", "nail", "name", "nap", "need", "neglect", "negotiate", "nod", "note", "notice",
    "obey", "object", "observe", "obtain", "occur", "offend", "offer", "open", "operate",
    "oppose", "order", "organize", "own", "pack", "paint", "panic", "parade", "pardon",
    "park", "participate", "pass", "paste", "pat", "pause", "perform", "permit", "persuade",
    "pet", "phone", "pick", "picture", "pitch", "pity", "place", "plan", "plant", "play",
    "plead", "please", "pledge", "plug", "point", "polish", "post", "postpone", "pour",
    "practice", "praise", "pray", "preach", "prefer", "prepare", "present", "press",
    "pretend", "prevent", "print", "produce", "profit", "program", "progress", "promise",
    "promote", "pronounce", "propose", "protect", "protest", "prove", "provide", "provoke",
    "publish", "pull", "pump", "punch", "punish", "purchase", "push", "question", "queue",
    "race", "rain", "raise", "reach", "react", "realize", "reassure", "recall", "receive",
    "recognize", "recommend", "record", "recover", "recycle", "reduce", "refer", "reflect",
    "refuse", "register", "regret", "rehearse", "reject", "relate", "relax", "release",
    "relieve", "rely", "remain", "remember", "remind", "remove", "rent", "repair", "repeat",
    "replace", "reply", "report", "request", "require", "rescue", "research", "resign",
    "resist", "resolve", "respect", "respond", "rest", "restrain", "retire", "return",
    "reveal", "review", "reward", "roar", "roast", "rob", "rock", "roll", "rub", "ruin",
    "rush", "sack", "saddle", "sail", "save", "scan", "scare", "scold", "scratch", "scream",
    "scrub", "search", "seem", "select", "separate", "serve", "settle", "share", "shave",
    "shiver", "shop", "shout", "shove", "shrug", "sigh", "sign", "signal", "ski", "skip",
    "slam", "slap", "slip", "smell", "smile", "smoke", "snap", "sneeze", "sniff", "snore",
    "snow", "soak", "solve", "sort", "sound", "spare", "spark", "spell", "spill", "splash",
    "spoil", "sponsor", "spot", "spray", "sprint", "spy", "squat", "squeeze", "stain",
    "stare", "start", "starve", "stay", "steer", "step", "stir", "stitch", "stop", "store",
    "stress", "stretch", "struggle", "study", "stumble", "subtract", "succeed", "suffer",
    "suggest", "suit", "supply", "support", "suppose", "surprise", "surrender", "surround",
    "survive", "suspect", "swallow", "swap", "switch", "sympathize", "talk", "tame", "tap",
    "taste", "tease", "test", "thank", "tickle", "tie", "tip", "tire", "torture", "toss",
    "touch", "tour", "trade", "train", "transfer", "translate", "transport", "trap",
    "travel", "treat", "tremble", "trick", "trip", "trot", "trouble", "trust", "try",
    "tumble", "turn", "tutor", "type", "uncover", "undress", "unfold", "unite", "unload",
    "unlock", "unpack", "unplug", "unsaddle", "untie", "unwrap", "update", "upgrade",
    "upload", "upset", "use", "vanish", "vary", "venture", "view", "visit", "volunteer",
    "vote", "wait", "walk", "wander", "want", "warm", "warn", "wash", "waste", "watch",
    "water", "wave", "weigh", "welcome", "whine", "whip", "whisper", "whistle", "wink",
    "wipe", "wish", "wonder", "work", "worry", "wrap", "wreck", "wrestle", "yawn", "yell",
    "zip",
};

// base, 3sg, past, past participle, gerund.
constexpr IrregularVerbRow kIrregularVerbs[] = {
    {"be", "is", "was", "been", "being"},
    {"have", "has", "had", "had", "having"},
    {"do", "does", "did", "done", "doing"},
    {"go", "goes", "went", "gone", "going"},
    {"say", "says", "said", "said", "saying"},
    {"make", "makes", "made", "made", "making"},
    {"take", "takes", "took", "taken", "taking"},
    {"get", "gets", "got", "gotten", "getting"},
    {"give", "gives", "gave", "given", "giving"},
    {"find", "finds", "found", "found", "finding"},
    {"think", "thinks", "thought", "thought", "thinking"},
    {"know", "knows", "knew", "known", "knowing"},
    {"come", "comes", "came", "come", "coming"},
    {"see", "sees", "saw", "seen", "seeing"},
    {"run", "runs", "ran", "run", "running"},
    {"sit", "sits", "sat", "sat", "sitting"},
    {"stand", "stands", "stood", "stood", "standing"},
    {"win", "wins", "won", "won", "winning"},
    {"lose", "loses", "lost", "lost", "losing"},
    {"meet", "meets", "met", "met", "meeting"},
    {"pay", "pays", "paid", "paid", "paying"},
    {"put", "puts", "put", "put", "putting"},
    {"read", "reads", "read", "read", "reading"},
    {"ride", "rides", "rode", "ridden", "riding"},
    {"ring", "rings", "rang", "rung", "ringing"},
    {"rise", "rises", "rose", "risen", "rising"},
    {"send", "sends", "sent", "sent", "sending"},
    {"sell", "sells", "sold", "sold", "selling"},
    {"set", "sets", "set", "set", "setting"},
    {"shake", "shakes", "shook", "shaken", "shaking"},
    {"sing", "sings", "sang", "sung", "singing"},
    {"sleep", "sleeps", "slept", "slept", "sleeping"},
    {"speak", "speaks", "spoke", "spoken", "speaking"},
    {"spend", "spends", "spent", "spent", "spending"},
    {"swim", "swims", "swam", "swum", "swimming"},
    {"teach", "teaches", "taught", "taught", "teaching"},
    {"throw", "throws", "threw", "thrown", "throwing"},
    {"understand", "understands", "understood", "understood", "understanding"},
    {"wear", "wears", "wore", "worn", "wearing"},
    {"write", "writes", "wrote", "written", "writing"},
    {"drive", "drives", "drove", "driven", "driving"},
    {"drink", "drinks", "drank", "drunk", "drinking"},
    {"draw", "draws", "drew", "drawn", "drawing"},
    {"fall", "falls", "fell", "fallen", "falling"},
    {"feel", "feels", "felt", "felt", "feeling"},
    {"fight", "fights", "fought", "fought", "fighting"},
    {"fly", "flies", "flew", "flown", "flying"},
    {"forget", "forgets", "forgot", "forgotten", "forgetting"},
    {"freeze", "freezes", "froze", "frozen", "freezing"},
    {"grow", "grows", "grew", "grown", "growing"},
    {"hang", "hangs", "hung", "hung", "hanging"},
    {"hear", "hears", "heard", "heard", "hearing"},
    {"hide", "hides", "hid", "hidden", "hiding"},
    {"hit", "hits", "hit", "hit", "hitting"},
    {"hold", "holds", "held", "held", "holding"},
    {"hurt", "hurts", "hurt", "hurt", "hurting"},
    {"keep", "keeps", "kept", "kept", "keeping"},
    {"lay", "lays", "laid", "laid", "laying"},
    {"lead", "leads", "led", "led", "leading"},
    {"leave", "leaves", "left", "left", "leaving"},
    {"lend", "lends", "lent", "lent", "lending"},
    {"let", "lets", "let", "let", "letting"},
    {"light", "lights", "lit", "lit", "lighting"},
    {"quit", "quits", "quit", "quit", "quitting"},
    {"cut", "cuts", "cut", "cut", "cutting"},
    {"cost", "costs", "cost", "cost", "costing"},
    {"catch", "catches", "caught", "caught", "catching"},
    {"choose", "chooses", "chose", "chosen", "choosing"},
    {"deal", "deals", "dealt", "dealt", "dealing"},
    {"dig", "digs", "dug", "dug", "digging"},
    {"feed", "feeds", "fed", "fed", "feeding"},
    {"bend", "bends", "bent", "bent", "bending"},
    {"bet", "bets", "bet", "bet", "betting"},
    {"bite", "bites", "bit", "bitten", "biting"},
    {"bleed", "bleeds", "bled", "bled", "bleeding"},
    {"blow", "blows", "blew", "blown", "blowing"},
    {"break", "breaks", "broke", "broken", "breaking"},
    {"bring", "brings", "brought", "brought", "bringing"},
    {"build", "builds", "built", "built", "building"},
    {"burst", "bursts", "burst", "burst", "bursting"},
    {"buy", "buys", "bought", "bought", "buying"},
    {"cast", "casts", "cast", "cast", "casting"},
    {"swear", "swears", "swore", "sworn", "swearing"},
    {"sweep", "sweeps", "swept", "swept", "sweeping"},
    {"steal", "steals", "stole", "stolen", "stealing"},
    {"stick", "sticks", "stuck", "stuck", "sticking"},
    {"sting", "stings", "stung", "stung", "stinging"},
    {"strike", "strikes", "struck", "struck", "striking"},
    {"swing", "swings", "swung", "swung", "swinging"},
    {"tear", "tears", "tore", "torn", "tearing"},
    {"wake", "wakes", "woke", "woken", "waking"},
    {"shoot", "shoots", "shot", "shot", "shooting"},
    {"show", "shows", "showed", "shown", "showing"},
    {"shut", "shuts", "shut", "shut", "shutting"},
    {"sink", "sinks", "sank", "sunk", "sinking"},
    {"slide", "slides", "slid", "slid", "sliding"},
    {"spin", "spins", "spun", "spun", "spinning"},
    {"spit", "spits", "spat", "spat", "spitting"},
    {"split", "splits", "split", "split", "splitting"},
    {"spread", "spreads", "spread", "spread", "spreading"},
    {"spring", "springs", "sprang", "sprung", "springing"},
    {"begin", "begins", "began", "begun", "beginning"},
    {"become", "becomes", "became", "become", "becoming"},
    {"bear", "bears", "bore", "borne", "bearing"},
    {"beat", "beats", "beat", "beaten", "beating"},
    {"seek", "seeks", "sought", "sought", "seeking"},
    {"shed", "sheds", "shed", "shed", "shedding"},
    {"mean", "means", "meant", "meant", "meaning"},
    {"tell", "tells", "told", "told", "telling"},
    {"eat", "eats", "ate", "eaten", "eating"},
    {"skate", "skates", "skated", "skated", "skating"},
    {"stop", "stops", "stopped", "stopped", "stopping"},
    {"halt", "halts", "halted", "halted", "halting"},
    {"forbid", "forbids", "forbade", "forbidden", "forbidding"},
};

constexpr const char* kDoublingBases[] = {
    "ban",  "bat",  "beg",  "blog", "blot", "brag", "chat", "chop", "chug", "clap", "cram",
    "crop", "dab",  "dim",  "dip",  "dot",  "drag", "drop", "drum", "fan",  "flap", "flip",
    "flop", "gab",  "gag",  "grab", "grin", "grip", "hop",  "hug",  "hum",  "jab",  "jam",
    "jog",  "knit", "knot", "lag",  "lug",  "map",  "mop",  "mug",  "nab",  "nag",  "nap",
    "nod",  "pat",  "pet",  "pin",  "plan", "plot", "plug", "pop",  "prop", "rig",  "rip",
    "rob",  "rub",  "sag",  "scan", "scrub","ship", "shop", "shrug","sip",  "skim", "skip",
    "slam", "slap", "slip", "snap", "sob",  "spot", "squat", "stab", "step", "stir",
    "stop", "strip","stun", "swap", "tag",  "tan",  "tap",  "throb","tip",  "top",  "trap",
    "trim", "trip", "trot", "tug",  "wag",  "whip", "wrap", "zip",
};

// Plural/-s surfaces used as nouns right after a determiner or possessive.
constexpr const char* kNounAfterDeterminer[] = {
    "acts",   "arms",   "books",  "calls",  "dreams", "drinks", "ends",   "eyes",
    "faces",  "forms",  "hands",  "heads",  "hopes",  "legs",   "lines",  "looks",
    "marks",  "names",  "notes",  "parts",  "places", "plans",  "plants", "plays",
    "points", "rocks",  "runs",   "shows",  "signs",  "starts", "steps",  "stops",
    "talks",  "turns",  "walks",  "waters", "works",
};

}  // namespace

std::span<const char* const> regular_bases() { return kRegularBases; }
std::span<const IrregularVerbRow> irregular_verbs() { return kIrregularVerbs; }
std::span<const char* const> doubling_bases() { return kDoublingBases; }
std::span<const char* const> noun_after_determiner() { return kNounAfterDeterminer; }

}  // namespace anionforge::verbs_data
