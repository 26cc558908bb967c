use super::{Category, RuleId, Severity};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleDescriptor {
    pub id: RuleId,
    /// The rule as stated in the design guideline.
    pub title: &'static str,
    pub category: Category,
    pub severity: Severity,
    pub suggestion: &'static str,
}

const fn rule(
    id: RuleId,
    title: &'static str,
    category: Category,
    severity: Severity,
    suggestion: &'static str,
) -> RuleDescriptor {
    RuleDescriptor {
        id,
        title,
        category,
        severity,
        suggestion,
    }
}

static DESCRIPTORS: [RuleDescriptor; 14] = [
    rule(
        RuleId::PluralNoun,
        "A plural noun should be used for collection or store names",
        Category::UriDesign,
        Severity::Warning,
        "Name collections with a plural noun, e.g. /users/{id} instead of /user/{id}.",
    ),
    rule(
        RuleId::SingularNoun,
        "A singular noun should be used for document names",
        Category::UriDesign,
        Severity::Warning,
        "Name single documents with a singular noun, e.g. /users/{id}/avatar.",
    ),
    rule(
        RuleId::VerbController,
        "A verb or verb phrase should be used for controller names",
        Category::UriDesign,
        Severity::Warning,
        "Name controller resources with a verb, e.g. POST /users/{id}/activate.",
    ),
    rule(
        RuleId::NoTrailingSlash,
        "A trailing forward slash (/) should not be included in URIs",
        Category::UriDesign,
        Severity::Warning,
        "Remove the trailing slash.",
    ),
    rule(
        RuleId::ForwardSlash,
        "Forward slash separator (/) must be used to indicate a hierarchical relationship",
        Category::UriDesign,
        Severity::Error,
        "Separate hierarchy levels with '/' instead of other punctuation.",
    ),
    rule(
        RuleId::NoFileExtensions,
        "File extensions should not be included in URIs",
        Category::UriDesign,
        Severity::Warning,
        "Drop the extension and negotiate the format with the Accept and Content-Type headers.",
    ),
    rule(
        RuleId::NoCrudNames,
        "CRUD function names should not be used in URIs",
        Category::UriDesign,
        Severity::Warning,
        "Express the operation with the HTTP method and keep the URI a noun, e.g. DELETE /users/{id}.",
    ),
    rule(
        RuleId::NoUnderscores,
        "Underscores (_) should not be used in URI",
        Category::UriDesign,
        Severity::Warning,
        "Replace underscores with hyphens.",
    ),
    rule(
        RuleId::Hyphens,
        "Hyphens (-) should be used to improve the readability of URIs",
        Category::UriDesign,
        Severity::Warning,
        "Separate the words of a segment with hyphens.",
    ),
    rule(
        RuleId::Lowercase,
        "Lowercase letters should be preferred in URI paths",
        Category::UriDesign,
        Severity::Warning,
        "Use lowercase letters in path segments.",
    ),
    rule(
        RuleId::ContentType,
        "Content-Type must be used",
        Category::MetadataDesign,
        Severity::Error,
        "Declare the media type of every request and response body.",
    ),
    rule(
        RuleId::NoTunnel,
        "GET and POST must not be used to tunnel other request methods",
        Category::RequestMethods,
        Severity::Error,
        "Use the HTTP method that matches the operation's semantics.",
    ),
    rule(
        RuleId::GetRetrieve,
        "GET must be used to retrieve a representation of a resource",
        Category::RequestMethods,
        Severity::Error,
        "GET operations should take no request body and return 200 (or a default response).",
    ),
    rule(
        RuleId::Rc401,
        "401 (Unauthorized) must be used when there is a problem with the client's credentials",
        Category::HttpStatusCodes,
        Severity::Error,
        "Declare a 401 Unauthorized response on every secured operation.",
    ),
];

/// All descriptors in reporting order.
pub fn descriptors() -> &'static [RuleDescriptor] {
    &DESCRIPTORS
}

pub fn descriptor(id: RuleId) -> &'static RuleDescriptor {
    &DESCRIPTORS[id as usize]
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn one_descriptor_per_rule_in_order() {
        let ids: Vec<_> = descriptors().iter().map(|d| d.id).collect();
        assert_eq!(ids, RuleId::ALL);
        assert_eq!(ids.iter().collect::<HashSet<_>>().len(), 14);
        for id in RuleId::ALL {
            assert_eq!(descriptor(id).id, id);
        }
    }

    #[test]
    fn severity_follows_modal_verb() {
        for d in descriptors() {
            let must = d.title.contains("must");
            assert_eq!(must, d.severity == Severity::Error, "{}", d.id);
            assert_ne!(must, d.title.contains("should"), "{}", d.id);
        }
        let errors: Vec<_> = descriptors()
            .iter()
            .filter(|d| d.severity == Severity::Error)
            .map(|d| d.id)
            .collect();
        assert_eq!(
            errors,
            [
                RuleId::ForwardSlash,
                RuleId::ContentType,
                RuleId::NoTunnel,
                RuleId::GetRetrieve,
                RuleId::Rc401
            ]
        );
    }

    #[test]
    fn categories() {
        use Category::*;
        let expect = |id: RuleId| match id {
            RuleId::ContentType => MetadataDesign,
            RuleId::NoTunnel | RuleId::GetRetrieve => RequestMethods,
            RuleId::Rc401 => HttpStatusCodes,
            _ => UriDesign,
        };
        for d in descriptors() {
            assert_eq!(d.category, expect(d.id));
        }
    }
}
