#!/usr/bin/env python3
"""Regenerate crates/core/tests/fixtures/rules/.

One OpenAPI document per rule holding seeded violations and clean near-misses
for that rule, plus gold.jsonl labelling every path of every document for the
rule the document is named after. Also writes the all-rules-clean document.
"""
import json
import pathlib

import yaml

OUT = pathlib.Path(__file__).resolve().parent.parent / "crates/core/tests/fixtures"

JSON = {"application/json": {"schema": {"type": "object"}}}


def ok(status="200", description="OK"):
    return {status: {"description": description, "content": JSON}}


def get(**extra):
    op = {"responses": ok()}
    op.update(extra)
    return {"get": op}


def post(**extra):
    op = {"requestBody": {"content": JSON}, "responses": ok("201", "Created")}
    op.update(extra)
    return {"post": op}


def bare(status, description="Response"):
    return {status: {"description": description}}


def merge(*dicts):
    out = {}
    for d in dicts:
        out.update(d)
    return out


BEARER = [{"bearer": []}]

# rule -> list of (path, path item, expected)
CASES = {
    "PluralNoun": [
        ("/user/{userId}", get(), True),
        ("/order/{orderId}", get(), True),
        ("/customer/{customerId}", get(), True),
        ("/product/{productId}", get(), True),
        ("/users/{userId}/address/{addressId}", get(), True),
        ("/stores/products/{productId}", get(), True),
        ("/users/{userId}", get(), False),
        ("/orders/{orderId}", get(), False),
        ("/people/{personId}", get(), False),
        ("/categories/{categoryId}", get(), False),
        ("/users/{userId}/addresses/{addressId}", get(), False),
        ("/stores/{storeId}/products/{productId}", get(), False),
    ],
    "SingularNoun": [
        ("/accounts/{accountId}/balances", get(), True),
        ("/orders/{orderId}/receipts", get(), True),
        ("/stores/{storeId}/managers", get(), True),
        ("/users/admins", get(), True),
        ("/tickets/{ticketId}/assignees", get(), True),
        ("/accounts/{accountId}/balance", get(), False),
        ("/orders/{orderId}/receipt", get(), False),
        ("/stores/{storeId}/manager", get(), False),
        ("/users/me", get(), False),
        ("/tickets/{ticketId}/assignee", get(), False),
        ("/tickets/{ticketId}/comments/{commentId}", get(), False),
    ],
    "VerbController": [
        ("/orders/{orderId}/cancellation", post(), True),
        ("/users/{userId}/activation", post(), True),
        ("/accounts/{accountId}/closure", post(), True),
        ("/documents/{documentId}/translation", post(), True),
        ("/tickets/{ticketId}/escalation", post(), True),
        ("/orders/{orderId}/cancel", post(), False),
        ("/users/{userId}/activate", post(), False),
        ("/accounts/{accountId}/close", post(), False),
        ("/documents/{documentId}/translate", post(), False),
        ("/tickets/{ticketId}/escalate", post(), False),
        ("/tickets/{ticketId}/comments", post(), False),
        ("/users/{userId}/avatar", merge(get(), post()), False),
    ],
    "NoTrailingSlash": [
        ("/users/", get(), True),
        ("/users/{userId}/", get(), True),
        ("/orders/{orderId}/items/", get(), True),
        ("/health/", get(), True),
        ("/v1/products/", get(), True),
        ("/users", get(), False),
        ("/users/{userId}", get(), False),
        ("/orders/{orderId}/items", get(), False),
        ("/health", get(), False),
        ("/", get(), False),
        ("/v1/products", get(), False),
    ],
    "ForwardSlash": [
        ("/users.orders", get(), True),
        ("/customers,invoices", get(), True),
        ("/reports;summary", get(), True),
        ("/catalog|items", get(), True),
        ("/users/{userId}/profile.settings", get(), True),
        ("/images/my-image.jpg", get(), False),
        ("/providers/Microsoft.Sql", get(), False),
        ("/photos/cat.heic", get(), False),
        ("/v1.2/users", get(), False),
        ("/files/{fileName}.{extension}", get(), False),
        ("/users/{userId}/settings", get(), False),
    ],
    "NoFileExtensions": [
        ("/reports/summary.pdf", get(), True),
        ("/images/my-image.jpg", get(), True),
        ("/photos/cat.heic", get(), True),
        ("/exports/{exportId}.csv", get(), True),
        ("/pages/{pageId}/html", get(), True),
        ("/reports/summary", get(), False),
        ("/providers/Microsoft.Sql", get(), False),
        ("/v1.2/status", get(), False),
        ("/images/{imageId}", get(), False),
        ("/json-schemas/{schemaId}", get(), False),
        ("/formats", get(), False),
    ],
    "NoCRUDNames": [
        ("/getUsers", get(), True),
        ("/createOrder", post(), True),
        ("/fetchInvoices", get(), True),
        ("/users/{userId}/remove", post(), True),
        ("/updateProfile", post(), True),
        ("/purgeCache", post(), True),
        ("/scripts/{scriptId}/updater", get(), False),
        ("/addresses", get(), False),
        ("/settings", get(), False),
        ("/posts/{postId}", get(), False),
        ("/budgets/{budgetId}", get(), False),
        ("/readiness", get(), False),
    ],
    "NoUnderscores": [
        ("/user_accounts", get(), True),
        ("/users/{user_id}", get(), True),
        ("/order_items/{itemId}", get(), True),
        ("/v1/api_keys", get(), True),
        ("/reports/{reportId}/line_items", get(), True),
        ("/user-accounts", get(), False),
        ("/users/{userId}", get(), False),
        ("/order-items/{itemId}", get(), False),
        ("/v1/api-keys", get(), False),
        ("/reports/{reportId}/line-items", get(), False),
    ],
    "Hyphens": [
        ("/orderitems", get(), True),
        ("/users/{userId}/shippingaddress", get(), True),
        ("/paymentmethods", get(), True),
        ("/useraccounts", get(), True),
        ("/creditcards/{cardId}", get(), True),
        ("/order-items", get(), False),
        ("/users/{userId}/shipping-address", get(), False),
        ("/payments", get(), False),
        ("/users", get(), False),
        ("/accounts/{accountId}/history", get(), False),
    ],
    "Lowercase": [
        ("/Users", get(), True),
        ("/users/{userId}/Orders", get(), True),
        ("/orderItems", get(), True),
        ("/API/status", get(), True),
        ("/users/{userId}/shippingAddress", get(), True),
        ("/users", get(), False),
        ("/users/{userId}/orders", get(), False),
        ("/order-items", get(), False),
        ("/api/status", get(), False),
        ("/accounts/{accountID}", get(), False),
    ],
    "ContentType": [
        ("/reports", {"get": {"responses": bare("200", "The report")}}, True),
        ("/uploads", {"post": {"requestBody": {"description": "File"}, "responses": ok("201")}}, True),
        ("/exports/{exportId}", {"get": {"responses": bare("200")}}, True),
        ("/members", {"post": {"requestBody": {"content": JSON}, "responses": bare("201", "Created")}}, True),
        ("/items/{itemId}", {"put": {"requestBody": {"content": JSON}, "responses": merge(ok(), bare("202", "Accepted"))}}, True),
        ("/summaries", get(), False),
        ("/sessions/{sessionId}", {"delete": {"responses": bare("204", "Deleted")}}, False),
        ("/cache", {"head": {"responses": bare("200")}}, False),
        ("/notices", {"get": {"responses": merge(ok(), bare("304", "Not modified"))}}, False),
        ("/avatars", {"post": {"requestBody": {"content": {"multipart/form-data": {"schema": {"type": "object"}}}}, "responses": ok("201")}}, False),
        ("/tags", {"get": {"responses": {"200": {"$ref": "#/components/responses/TagList"}}}}, False),
    ],
    "NoTunnel": [
        ("/users/{userId}", {"get": {"summary": "Delete the specified user", "responses": ok()}}, True),
        ("/orders/{orderId}/status", {"get": {"summary": "Update the status of an order", "responses": ok()}}, True),
        ("/customers/list", {"post": {"summary": "Retrieve a list of all customers", "requestBody": {"content": JSON}, "responses": ok()}}, True),
        ("/carts/{cartId}/items", {"post": {"summary": "Remove an item from the cart", "requestBody": {"content": JSON}, "responses": ok()}}, True),
        ("/customers/new", {"get": {"summary": "Create a new customer", "responses": ok()}}, True),
        ("/users", {"get": {"summary": "Retrieve a list of users", "responses": ok()}}, False),
        ("/orders", {"post": {"summary": "Create a new order", "requestBody": {"content": JSON}, "responses": ok("201")}}, False),
        ("/invoices/{invoiceId}", {"get": {"summary": "Returns the invoice with the given ID", "responses": ok()}}, False),
        ("/accounts/{accountId}", {"put": {"summary": "Delete the account and replace it", "requestBody": {"content": JSON}, "responses": ok()}}, False),
        ("/ping", {"get": {"responses": ok()}}, False),
    ],
    "GETRetrieve": [
        ("/search", {"get": {"requestBody": {"content": JSON}, "responses": ok()}}, True),
        ("/reports/{reportId}", {"get": {"responses": ok("201", "Created")}}, True),
        ("/users/{userId}", {"get": {"responses": merge(ok("404", "Not found"), ok("400", "Bad request"))}}, True),
        ("/health", {"get": {"responses": bare("204", "Healthy")}}, True),
        ("/logs", {"get": {"requestBody": {"content": JSON}, "responses": ok()}}, True),
        ("/users", get(), False),
        ("/orders", {"get": {"responses": {"default": {"description": "Orders", "content": JSON}}}}, False),
        ("/items", {"get": {"responses": merge(ok(), ok("404", "Not found"))}}, False),
        ("/events", post(), False),
        ("/status", {"get": {"responses": merge(ok(), ok("500", "Error"))}}, False),
    ],
    "RC401": [
        ("/accounts", {"get": {"security": BEARER, "responses": ok()}}, True),
        ("/payments", {"post": {"security": BEARER, "requestBody": {"content": JSON}, "responses": ok("201")}}, True),
        ("/admin/users/{userId}", {"delete": {"security": BEARER, "responses": bare("204", "Deleted")}}, True),
        ("/profile", {"get": {"security": BEARER, "responses": merge(ok(), ok("401", "Forbidden"))}}, True),
        ("/tokens", {"post": {"security": BEARER, "requestBody": {"content": JSON}, "responses": merge(ok("201"), ok("401", "Not found"))}}, True),
        ("/public/status", get(), False),
        ("/me", {"get": {"security": BEARER, "responses": merge(ok(), ok("401", "Unauthorized"))}}, False),
        ("/orders", {"get": {"security": BEARER, "responses": merge(ok(), ok("401", "Authentication required"))}}, False),
        ("/keys", {"get": {"security": [], "responses": ok()}}, False),
        ("/projects", {"get": {"security": BEARER, "responses": merge(ok(), ok("401", "Unauthorised"))}}, False),
        ("/teams", {"get": {"security": BEARER, "responses": merge(ok(), ok("401", "Missing or invalid token"), ok("403", "Forbidden"))}}, False),
    ],
}

COMPONENTS = {
    "securitySchemes": {"bearer": {"type": "http", "scheme": "bearer"}},
    "responses": {"TagList": {"description": "Tags", "content": JSON}},
}


def document(title, paths):
    return {
        "openapi": "3.0.3",
        "info": {"title": title, "version": "1.0.0"},
        "paths": paths,
        "components": COMPONENTS,
    }


class PlainDumper(yaml.SafeDumper):
    def ignore_aliases(self, data):
        return True


def dump(path, doc):
    path.write_text(yaml.dump(doc, Dumper=PlainDumper, sort_keys=False, width=120))


def main():
    rules_dir = OUT / "rules"
    rules_dir.mkdir(parents=True, exist_ok=True)
    gold = []
    for rule, cases in CASES.items():
        paths = {}
        for template, item, expected in cases:
            assert template not in paths, (rule, template)
            paths[template] = item
            gold.append({"file": f"{rule}.yaml", "rule": rule, "path": template, "expected": expected})
        dump(rules_dir / f"{rule}.yaml", document(f"{rule} fixtures", paths))
    with open(rules_dir / "gold.jsonl", "w") as f:
        for label in gold:
            f.write(json.dumps(label) + "\n")

    clean = {
        "/users": merge(get(summary="List users"), post(summary="Create a user")),
        "/users/{userId}": merge(
            get(summary="Get a user"),
            {"delete": {"summary": "Delete a user", "responses": bare("204", "Deleted")}},
        ),
        "/users/{userId}/profile": get(summary="Get the profile of a user"),
        "/users/{userId}/orders/{orderId}": get(summary="Get an order"),
        "/orders/{orderId}/cancel": post(summary="Cancel an order"),
        "/shipping-addresses/{addressId}": {
            "put": {
                "summary": "Replace an address",
                "requestBody": {"content": JSON},
                "responses": ok(),
            }
        },
        "/account": {
            "get": {
                "summary": "Get the current account",
                "security": BEARER,
                "responses": merge(ok(), ok("401", "Unauthorized")),
            }
        },
    }
    dump(OUT / "clean.yaml", document("Clean API", clean))


if __name__ == "__main__":
    main()
