#!/usr/bin/env python3
"""Regenerate crates/core/data/starter_corpus.csv.

A synthetic, template-based corpus of operation descriptions labeled with
the HTTP verb they describe (or INVALID for descriptions that carry no
usable meaning). Deterministic for a fixed seed.
"""
import csv
import pathlib
import random

RESOURCES = [
    ("user", "users"), ("pet", "pets"), ("order", "orders"), ("account", "accounts"),
    ("invoice", "invoices"), ("product", "products"), ("customer", "customers"),
    ("comment", "comments"), ("project", "projects"), ("team", "teams"),
    ("file", "files"), ("document", "documents"), ("payment", "payments"),
    ("subscription", "subscriptions"), ("webhook", "webhooks"), ("repository", "repositories"),
    ("issue", "issues"), ("message", "messages"), ("channel", "channels"),
    ("device", "devices"), ("group", "groups"), ("role", "roles"), ("policy", "policies"),
    ("address", "addresses"), ("booking", "bookings"), ("ticket", "tickets"),
    ("article", "articles"), ("category", "categories"), ("tag", "tags"),
    ("report", "reports"), ("job", "jobs"), ("event", "events"), ("image", "images"),
    ("note", "notes"), ("task", "tasks"), ("contact", "contacts"), ("token", "tokens"),
    ("store", "stores"), ("shipment", "shipments"), ("playlist", "playlists"),
]

QUALIFIERS = ["", "", "", " for the current user", " in the workspace", " by ID",
              " for the given organization", " with the specified identifier",
              " belonging to the authenticated account", " in the project"]

TEMPLATES = {
    "GET": [
        "Returns the list of {p}", "Returns all {p}", "Get a {s}", "Get {s} by ID",
        "Retrieves a single {s}", "Retrieve the {s} details", "Lists all {p}",
        "List {p}", "Fetches the {p} for a page", "Returns a {s} by its identifier",
        "Gets the details of a {s}", "Find {p} by status", "Search {p} matching a query",
        "Returns a paginated collection of {p}", "Show information about a {s}",
        "Read a {s}", "Look up a {s}", "Download the {s}", "Returns the {s} with the given id",
        "View {p}", "Count the number of {p}", "Export {p} as a list", "Query {p}",
        "Returns statistics for {p}", "Returns the current state of the {s}",
    ],
    "POST": [
        "Creates a new {s}", "Create a {s}", "Add a new {s}", "Adds a {s} to the collection",
        "Registers a new {s}", "Submit a new {s}", "Creates {p} in bulk", "Upload a new {s}",
        "Insert a {s}", "Post a new {s}", "Create and return a new {s}",
        "Adds a new {s} to the store", "Creates a {s} with the provided data",
        "Start a new {s}", "Open a new {s}", "Generate a new {s}", "Publish a new {s}",
        "Import {p}", "Enqueue a new {s}", "Submits the {s} for processing",
    ],
    "PUT": [
        "Updates a {s}", "Update an existing {s}", "Replaces the {s}", "Replace a {s} entirely",
        "Update the {s} with new data", "Overwrites the {s}", "Updates all fields of a {s}",
        "Save changes to a {s}", "Set the {s} configuration", "Replace the {p} list",
        "Upsert a {s}", "Update {s} by ID", "Stores the full {s} representation",
        "Updates an existing {s} with the supplied values", "Replace the contents of a {s}",
    ],
    "PATCH": [
        "Partially updates a {s}", "Patch a {s}", "Modify some fields of a {s}",
        "Apply a partial update to the {s}", "Change the name of a {s}",
        "Partially modify the {s}", "Updates selected attributes of a {s}",
        "Patch the {s} settings", "Edit individual properties of a {s}",
        "Apply a JSON patch to the {s}", "Partial update of {s} fields",
        "Modify the {s} status", "Incrementally update the {s}", "Amend a {s}",
    ],
    "DELETE": [
        "Deletes a {s}", "Delete the {s}", "Removes a {s}", "Remove the {s} from the list",
        "Deletes the {s} account", "Delete {s} by ID", "Permanently deletes a {s}",
        "Destroy a {s}", "Purge all {p}", "Erase the {s}", "Delete all {p}",
        "Remove {p} in bulk", "Deletes the specified {s}", "Cancel and delete the {s}",
        "Discard the {s}", "Revoke and remove the {s}", "Clear all {p}",
        "Wipe the {s} data", "Unregister the {s}", "Delete an existing {s}",
    ],
}

INVALID = [
    "TODO", "todo", "test", "testing", "asdf", "string", "No description", "no description provided",
    "Lorem ipsum dolor sit amet", "lorem ipsum", "foo", "bar", "foo bar baz", "description",
    "summary", "N/A", "n/a", "tbd", "TBD", "xxx", "sample text", "placeholder", "Description here",
    "Endpoint", "endpoint", "API", "api endpoint", "operation", "This is an endpoint",
    "Auto generated", "generated", "undefined", "null", "none", "-", "...", "?", "WIP",
    "work in progress", "FIXME", "hello world", "Hello", "qwerty", "abc", "xyz", "test endpoint",
    "dummy", "temp", "example", "blah", "blah blah", "Some text", "My endpoint", "Method",
    "route", "handler", "controller action", "default", "misc", "other", "stuff", "thing",
    "See docs", "see documentation", "Refer to wiki", "internal", "deprecated", "legacy",
]


def main():
    rng = random.Random(20231205)
    rows = []
    for label, templates in TEMPLATES.items():
        for template in templates:
            for s, p in rng.sample(RESOURCES, 6):
                text = template.format(s=s, p=p) + rng.choice(QUALIFIERS)
                rows.append((label, text))
    for text in INVALID:
        rows.append(("INVALID", text))
        rows.append(("INVALID", text.lower() + "."))
    rng.shuffle(rows)
    out = pathlib.Path(__file__).resolve().parent.parent / "crates/core/data/starter_corpus.csv"
    with out.open("w", newline="", encoding="utf-8") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["label", "text"])
        w.writerows(rows)
    print(len(rows), "samples")


if __name__ == "__main__":
    main()
