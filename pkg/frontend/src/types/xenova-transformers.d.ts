// Optional dependency, loaded dynamically when a real model id is used.
// Install @xenova/transformers to enable; untyped on purpose.
declare module "@xenova/transformers";
