namespace ttk {}
